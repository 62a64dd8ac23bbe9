#include <algorithm>
#include <cmath>
#include <cstdint>

#include "ejmt/interpretation.hpp"
#include "heads.hpp"

namespace ejmt {

bool ranks_before(double total_a, const std::string& sig_a, double total_b, const std::string& sig_b) {
  // Quantized so that summation-order noise never reorders equal totals.
  const double ka = std::round(total_a * 1e9);
  const double kb = std::round(total_b * 1e9);
  if (ka != kb) return ka > kb;
  return sig_a < sig_b;
}

bool ranks_before(const Interpretation& a, const Interpretation& b) {
  return ranks_before(a.breakdown.total, a.signature, b.breakdown.total, b.signature);
}

namespace {

using namespace detail;

/// A verb whose vp chain is still growing: later pp attachments and the
/// subject can still fill its slots.
struct OpenVerb {
  const LexSense* sense = nullptr;
  std::vector<std::string> filled;
};

struct Partial {
  Tree tree;
  std::string sig;
  double lex = 0, rule = 0, arg = 0, conj = 0;
  double total = 0;
  const LexSense* head = nullptr;
  std::vector<OpenVerb> open;
  std::uint64_t satisfied = 0;
};

using PartialPtr = std::shared_ptr<const Partial>;

class Search {
 public:
  Search(const Forest& forest, const ResourceBundle& bundle, const Constraints& constraints, std::size_t beam)
      : forest_(forest), bundle_(bundle), cfg_(bundle.config()), tax_(bundle.taxonomy()),
        constraints_(constraints), beam_(beam) {}

  std::vector<PartialPtr> run() {
    const auto root = *forest_.root();
    table_.assign(forest_.nodes().size(), {});
    for (std::size_t id = 0; id <= root; ++id) table_[id] = expand(id);
    std::vector<PartialPtr> out;
    for (const auto& p : table_[root]) {
      if (!all_required(p->satisfied)) continue;
      if (p->open.empty()) {
        out.push_back(p);
        continue;
      }
      auto closed = std::make_shared<Partial>(*p);
      for (const auto& v : closed->open) close_verb(*closed, v);
      closed->open.clear();
      closed->total = weigh(*closed);
      out.push_back(std::move(closed));
    }
    return out;
  }

 private:
  double weigh(const Partial& p) const { return ScoreBreakdown::weighted(p.lex, p.rule, p.arg, p.conj, cfg_); }

  bool all_required(std::uint64_t mask) const {
    const auto n = constraints_.required_spans.size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return (mask & all) == all;
  }

  double slot_term(const LexSense& filler, const FrameSlot& slot) const {
    return tax_.is_a(tax_.id(filler.sem), tax_.id(slot.expected)) ? cfg_.arg_bonus : cfg_.arg_penalty;
  }

  void fill(Partial& p, OpenVerb& verb, const std::string& name, const LexSense* filler) const {
    if (!filler) return;
    if (std::find(verb.filled.begin(), verb.filled.end(), name) != verb.filled.end()) return;
    verb.filled.push_back(name);
    for (const auto& slot : *verb.sense->frame) {
      if (slot.name == name) p.arg += slot_term(*filler, slot);
    }
  }

  void close_verb(Partial& p, const OpenVerb& verb) const {
    for (const auto& slot : *verb.sense->frame) {
      if (slot.strength != SlotStrength::required) continue;
      if (std::find(verb.filled.begin(), verb.filled.end(), slot.name) == verb.filled.end()) p.arg += cfg_.arg_penalty;
    }
  }

  /// Node-level span checks that do not depend on the chosen derivation.
  bool span_allowed(const Span& span) const {
    for (const auto& f : constraints_.forbidden_spans) {
      if (f == span) return false;
    }
    for (const auto& r : constraints_.required_spans) {
      if (span.crosses(r.span)) return false;
    }
    return true;
  }

  /// Marks required spans this node satisfies and rejects partials that
  /// strictly contain a required span they do not include.
  bool settle_required(Partial& p, const std::string& category, const Span& span) const {
    for (std::size_t b = 0; b < constraints_.required_spans.size(); ++b) {
      const auto& r = constraints_.required_spans[b];
      if (r.span == span && (!r.category || *r.category == category)) p.satisfied |= std::uint64_t{1} << b;
      if (span.contains(r.span) && span != r.span && !(p.satisfied & (std::uint64_t{1} << b))) return false;
    }
    return true;
  }

  bool sense_allowed(std::size_t token, const LexSense& sense) const {
    for (const auto& pin : constraints_.pinned_senses) {
      if (pin.token == token && pin.sense_id != sense.sense_id) return false;
    }
    return true;
  }

  std::vector<PartialPtr> expand(std::size_t id) {
    const auto& node = forest_.node(id);
    std::vector<PartialPtr> candidates;
    if (!span_allowed(node.span)) return candidates;
    for (const auto& alt : node.alternatives) {
      if (const auto* lex = std::get_if<LexicalDerivation>(&alt)) {
        for (const auto& s : lex->senses) {
          if (!sense_allowed(node.span.begin, *s)) continue;
          auto p = std::make_shared<Partial>();
          p->tree = make_leaf(node.category, node.span.begin, s);
          p->sig = leaf_signature(*s);
          p->lex = s->weight;
          p->head = s.get();
          if (!settle_required(*p, node.category, node.span)) continue;
          p->total = weigh(*p);
          candidates.push_back(std::move(p));
        }
        continue;
      }
      const auto& rd = std::get<RuleDerivation>(alt);
      std::vector<const Partial*> picked;
      combine(node, rd, 0, picked, candidates);
    }
    std::sort(candidates.begin(), candidates.end(), [](const PartialPtr& a, const PartialPtr& b) {
      return ranks_before(a->total, a->sig, b->total, b->sig);
    });
    if (candidates.size() > beam_) candidates.resize(beam_);
    return candidates;
  }

  void combine(const ForestNode& node, const RuleDerivation& rd, std::size_t m, std::vector<const Partial*>& picked,
               std::vector<PartialPtr>& out) {
    if (m < rd.children.size()) {
      for (const auto& child : table_[rd.children[m]]) {
        picked.push_back(child.get());
        combine(node, rd, m + 1, picked, out);
        picked.pop_back();
      }
      return;
    }
    auto p = build(node, rd, picked);
    if (p) out.push_back(std::move(p));
  }

  PartialPtr build(const ForestNode& node, const RuleDerivation& rd, const std::vector<const Partial*>& ch) const {
    const auto& rule = bundle_.grammar()[rd.rule];
    auto p = std::make_shared<Partial>();
    std::vector<Tree> kids;
    kids.reserve(ch.size());
    p->sig = rule.id;
    p->rule = rule.weight;
    for (const auto* c : ch) {
      kids.push_back(c->tree);
      p->sig += ' ';
      p->sig += c->sig;
      p->lex += c->lex;
      p->rule += c->rule;
      p->arg += c->arg;
      p->conj += c->conj;
      p->satisfied |= c->satisfied;
    }
    p->tree = make_internal(rule, rd.rule, std::move(kids));
    if (!settle_required(*p, node.category, node.span)) return nullptr;

    auto category_of = [&](std::size_t i) -> std::string_view { return ch[i]->tree->category; };
    auto is_lexical = [&](std::size_t i) { return ch[i]->tree->is_lexical(); };
    if (auto h = head_child(node.category, ch.size(), category_of, is_lexical)) p->head = ch[*h]->head;

    if (rule.conj) {
      const auto* left = ch.front()->head;
      const auto* right = ch.back()->head;
      if (left && right) p->conj += cfg_.conj_bonus * tax_.sim(tax_.id(left->sem), tax_.id(right->sem));
    }

    auto first_head = [&](std::string_view category) -> const LexSense* {
      for (const auto* c : ch) {
        if (c->tree->category == category) return c->head;
      }
      return nullptr;
    };

    std::vector<OpenVerb> verbs;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (ch[i]->tree->is_lexical() && ch[i]->tree->sense->frame) {
        verbs.push_back(OpenVerb{ch[i]->tree->sense.get(), {}});
        if (node.category == kCatVp) fill(*p, verbs.back(), std::string(kSlotObj), first_head(kCatNp));
      } else if (ch[i]->tree->category == kCatVp) {
        verbs.insert(verbs.end(), ch[i]->open.begin(), ch[i]->open.end());
      }
    }

    if (node.category == kCatVp) {
      for (const auto* c : ch) {
        if (c->tree->category != kCatPp) continue;
        const TreeNode* prep = nullptr;
        const LexSense* object = nullptr;
        for (const auto& g : c->tree->children) {
          if (!prep && g->is_lexical() && g->category == kCatP) prep = g.get();
        }
        for (std::size_t gi = 0; gi < c->tree->children.size(); ++gi) {
          if (c->tree->children[gi]->category == kCatNp) {
            object = head_of(*c->tree->children[gi]);
            break;
          }
        }
        if (!prep) continue;
        for (auto& v : verbs) fill(*p, v, prep->sense->surface, object);
      }
      p->open = std::move(verbs);
    } else {
      const LexSense* subj = node.category == kCatS ? first_head(kCatNp) : nullptr;
      for (auto& v : verbs) {
        fill(*p, v, std::string(kSlotSubj), subj);
        close_verb(*p, v);
      }
    }
    p->total = weigh(*p);
    return p;
  }

  /// Head of an already-built subtree (pp children are not partials).
  static const LexSense* head_of(const TreeNode& node) {
    if (node.is_lexical()) return node.sense.get();
    const auto& c = node.children;
    auto idx = head_child(
        node.category, c.size(), [&](std::size_t i) -> std::string_view { return c[i]->category; },
        [&](std::size_t i) { return c[i]->is_lexical(); });
    return idx ? head_of(*c[*idx]) : nullptr;
  }

  const Forest& forest_;
  const ResourceBundle& bundle_;
  const ExpertConfig& cfg_;
  const Taxonomy& tax_;
  const Constraints& constraints_;
  std::size_t beam_;
  std::vector<std::vector<PartialPtr>> table_;
};

Interpretation finish(const Tree& tree, const ResourceBundle& bundle) {
  Interpretation out;
  out.tree = tree;
  out.breakdown = score_tree(*tree, bundle);
  out.signature = signature(*tree);
  return out;
}

}  // namespace

std::vector<Interpretation> kbest_interpretations(const Forest& forest, const ResourceBundle& bundle,
                                                  const Constraints& constraints, std::size_t beam, std::size_t k) {
  if (!forest.root()) throw InterpretationError(InterpretationError::Kind::no_parse, "no-parse");
  if (beam == 0 || k == 0) throw std::invalid_argument("beam and k must be positive");
  if (constraints.required_spans.size() > kMaxRequiredSpans) throw ConstraintError("too many required spans");
  auto survivors = Search(forest, bundle, constraints, beam).run();
  if (survivors.empty()) {
    throw InterpretationError(InterpretationError::Kind::unsatisfiable, "constraints unsatisfiable");
  }
  std::vector<Interpretation> out;
  out.reserve(survivors.size());
  for (const auto& p : survivors) out.push_back(finish(p->tree, bundle));
  std::sort(out.begin(), out.end(), [](const Interpretation& a, const Interpretation& b) { return ranks_before(a, b); });
  if (out.size() > k) out.resize(k);
  return out;
}

Interpretation select_best(const Forest& forest, const ResourceBundle& bundle, const Constraints& constraints) {
  return kbest_interpretations(forest, bundle, constraints, bundle.config().beam, 1).front();
}

Interpretation oracle_select(const Forest& forest, const ResourceBundle& bundle, const Constraints& constraints,
                             std::size_t cap) {
  if (!forest.root()) throw InterpretationError(InterpretationError::Kind::no_parse, "no-parse");
  if (count_parses(forest) > cap) {
    throw InterpretationError(InterpretationError::Kind::oracle_cap_exceeded, "oracle cap exceeded");
  }
  std::optional<Interpretation> best;
  for (const auto& tree : enumerate_trees(forest, kUnlimited)) {
    if (!satisfies(*tree, constraints)) continue;
    auto candidate = finish(tree, bundle);
    if (!best || ranks_before(candidate, *best)) best = std::move(candidate);
  }
  if (!best) throw InterpretationError(InterpretationError::Kind::unsatisfiable, "constraints unsatisfiable");
  return *best;
}

}  // namespace ejmt
