#include <algorithm>
#include <set>
#include <stdexcept>

#include "ejmt/interpretation.hpp"
#include "heads.hpp"

namespace ejmt {
namespace {

using namespace detail;

const TreeNode* head_leaf(const TreeNode& node) {
  if (node.is_lexical()) return &node;
  const auto& ch = node.children;
  auto idx = head_child(
      node.category, ch.size(), [&](std::size_t i) -> std::string_view { return ch[i]->category; },
      [&](std::size_t i) { return ch[i]->is_lexical(); });
  return idx ? head_leaf(*ch[*idx]) : nullptr;
}

const TreeNode* first_child(const TreeNode& node, std::string_view category) {
  for (const auto& c : node.children) {
    if (c->category == category) return c.get();
  }
  return nullptr;
}

const TreeNode* first_lexical_child(const TreeNode& node, std::string_view category) {
  for (const auto& c : node.children) {
    if (c->is_lexical() && c->category == category) return c.get();
  }
  return nullptr;
}

struct Walker {
  const ResourceBundle& bundle;
  ScoreBreakdown out;
  std::vector<const TreeNode*> path;  // ancestors of the current node, root first

  void visit(const TreeNode& node) {
    if (node.is_lexical()) {
      if (!node.sense || node.sense->pos != node.category) throw std::logic_error("malformed tree: leaf category");
      out.s_lex += node.sense->weight;
      if (node.sense->frame) out.s_arg += verb_term(node);
      return;
    }
    const auto& rule = bundle.grammar().at(*node.rule);
    if (rule.lhs != node.category || rule.rhs.size() != node.children.size()) {
      throw std::logic_error("malformed tree: rule " + rule.id);
    }
    for (std::size_t i = 0; i < rule.rhs.size(); ++i) {
      if (node.children[i]->category != rule.rhs[i]) throw std::logic_error("malformed tree: rule " + rule.id);
    }
    out.s_rule += rule.weight;
    if (rule.conj) {
      const auto* left = head_leaf(*node.children.front());
      const auto* right = head_leaf(*node.children.back());
      if (left && right) {
        const auto& tax = bundle.taxonomy();
        out.s_conj += bundle.config().conj_bonus * tax.sim(tax.id(left->sense->sem), tax.id(right->sense->sem));
      }
    }
    path.push_back(&node);
    for (const auto& c : node.children) visit(*c);
    path.pop_back();
  }

  /// Slot evaluation for one verb leaf; `path` holds its ancestors.
  double verb_term(const TreeNode& verb) const {
    const auto& cfg = bundle.config();
    const auto& tax = bundle.taxonomy();
    std::vector<std::pair<std::string, const TreeNode*>> fills;
    auto fill = [&](std::string name, const TreeNode* np) {
      const auto* head = np ? head_leaf(*np) : nullptr;
      if (!head) return;
      for (const auto& f : fills) {
        if (f.first == name) return;
      }
      fills.emplace_back(std::move(name), head);
    };

    // Ancestors from the verb's parent upward while they are vp.
    std::size_t top = path.size();  // index in `path` of the parent of the chain top
    if (!path.empty() && path.back()->category == kCatVp) {
      fill(std::string(kSlotObj), first_child(*path.back(), kCatNp));
      std::size_t k = path.size();
      while (k > 0 && path[k - 1]->category == kCatVp) {
        const auto& vp = *path[k - 1];
        for (const auto& c : vp.children) {
          if (c->category != kCatPp) continue;
          const auto* prep = first_lexical_child(*c, kCatP);
          if (prep) fill(prep->sense->surface, first_child(*c, kCatNp));
        }
        --k;
      }
      top = k;  // path[k - 1] is the parent of the topmost vp, if any
    }
    if (top > 0 && path[top - 1]->category == kCatS) fill(std::string(kSlotSubj), first_child(*path[top - 1], kCatNp));

    double term = 0;
    for (const auto& slot : *verb.sense->frame) {
      auto it = std::find_if(fills.begin(), fills.end(), [&](const auto& f) { return f.first == slot.name; });
      if (it != fills.end()) {
        term += tax.is_a(tax.id(it->second->sense->sem), tax.id(slot.expected)) ? cfg.arg_bonus : cfg.arg_penalty;
      } else if (slot.strength == SlotStrength::required) {
        term += cfg.arg_penalty;
      }
    }
    return term;
  }
};

}  // namespace

ScoreBreakdown score_tree(const TreeNode& tree, const ResourceBundle& bundle) {
  Walker w{bundle, {}, {}};
  w.visit(tree);
  auto& b = w.out;
  b.total = ScoreBreakdown::weighted(b.s_lex, b.s_rule, b.s_arg, b.s_conj, bundle.config());
  return b;
}

bool satisfies(const TreeNode& tree, const Constraints& constraints) {
  const auto spans = constituents(tree);
  for (const auto& req : constraints.required_spans) {
    bool found = std::any_of(spans.begin(), spans.end(), [&](const auto& s) {
      return s.first == req.span && (!req.category || *req.category == s.second);
    });
    if (!found) return false;
  }
  for (const auto& forbidden : constraints.forbidden_spans) {
    if (std::any_of(spans.begin(), spans.end(), [&](const auto& s) { return s.first == forbidden; })) return false;
  }
  const auto lv = leaves(tree);
  for (const auto& pin : constraints.pinned_senses) {
    if (pin.token >= lv.size() || lv[pin.token]->sense->sense_id != pin.sense_id) return false;
  }
  return true;
}

void validate_constraints(const Constraints& constraints, const std::vector<Token>& tokens,
                          const ResourceBundle& bundle) {
  const std::size_t n = tokens.size();
  auto check_span = [&](const Span& s) {
    if (!(s.begin < s.end && s.end <= n)) {
      throw ConstraintError("span (" + std::to_string(s.begin) + "," + std::to_string(s.end) +
                            ") out of range for " + std::to_string(n) + " tokens");
    }
  };
  if (constraints.required_spans.size() > kMaxRequiredSpans) throw ConstraintError("too many required spans");
  for (const auto& r : constraints.required_spans) check_span(r.span);
  for (const auto& f : constraints.forbidden_spans) check_span(f);
  for (const auto& pin : constraints.pinned_senses) {
    if (pin.token >= n) throw ConstraintError("pinned token index out of range");
    const auto* senses = bundle.senses(tokens[pin.token].norm);
    bool known = senses && std::any_of(senses->begin(), senses->end(),
                                       [&](const LexSense& s) { return s.sense_id == pin.sense_id; });
    if (!known) throw ConstraintError("unknown sense for token");
  }
}

}  // namespace ejmt
