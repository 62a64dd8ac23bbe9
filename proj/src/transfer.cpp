#include "ejmt/transfer.hpp"

#include <map>

namespace ejmt {

TargetTree target_leaf(std::string morpheme) {
  auto n = std::make_shared<TargetNode>();
  n->label = std::move(morpheme);
  n->leaf = true;
  return n;
}

TargetTree target_node(std::string label, std::vector<TargetTree> children) {
  auto n = std::make_shared<TargetNode>();
  n->label = std::move(label);
  n->children = std::move(children);
  return n;
}

bool same_tree(const TargetTree& a, const TargetTree& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->leaf != b->leaf || a->label != b->label || a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i) {
    if (!same_tree(a->children[i], b->children[i])) return false;
  }
  return true;
}

namespace {

void collect(const TargetTree& t, std::vector<std::string>& out) {
  if (!t) return;
  if (t->leaf) {
    out.push_back(t->label);
    return;
  }
  for (const auto& c : t->children) collect(c, out);
}

TargetTree convert(const TreeNode& node, const ResourceBundle& bundle) {
  if (node.is_lexical()) {
    if (node.sense->ja.empty()) return nullptr;
    return target_node(node.category, {target_leaf(node.sense->ja)});
  }
  const auto& rule = bundle.grammar().at(*node.rule);
  std::vector<TargetTree> kids;
  for (std::size_t t = 0; t < rule.reorder.size(); ++t) {
    if (auto child = convert(*node.children[rule.reorder[t]], bundle)) kids.push_back(std::move(child));
    for (const auto& ins : rule.inserts) {
      if (ins.position == t) kids.push_back(target_leaf(ins.morpheme));
    }
  }
  if (kids.empty()) return nullptr;
  return target_node(node.category, std::move(kids));
}

using Bindings = std::map<std::string, TargetTree, std::less<>>;

bool match(const TreePattern& p, const TargetTree& t, Bindings& b) {
  switch (p.kind) {
    case TreePattern::Kind::variable: {
      auto [it, inserted] = b.emplace(p.text, t);
      return inserted || same_tree(it->second, t);
    }
    case TreePattern::Kind::literal:
      return t->leaf && t->label == p.text;
    case TreePattern::Kind::node:
      break;
  }
  if (t->leaf || t->label != p.text || t->children.size() != p.children.size()) return false;
  for (std::size_t i = 0; i < p.children.size(); ++i) {
    if (!match(p.children[i], t->children[i], b)) return false;
  }
  return true;
}

TargetTree instantiate(const TreePattern& p, const Bindings& b) {
  switch (p.kind) {
    case TreePattern::Kind::variable:
      return b.at(p.text);
    case TreePattern::Kind::literal:
      return target_leaf(p.text);
    case TreePattern::Kind::node:
      break;
  }
  std::vector<TargetTree> kids;
  kids.reserve(p.children.size());
  for (const auto& c : p.children) kids.push_back(instantiate(c, b));
  return target_node(p.text, std::move(kids));
}

/// Rewrites the first pre-order match below `t`; null when nothing matched.
TargetTree rewrite_first(const TargetTree& t, const Xform& x) {
  Bindings b;
  if (match(x.pattern, t, b)) return instantiate(x.rewrite, b);
  if (t->leaf) return nullptr;
  for (std::size_t i = 0; i < t->children.size(); ++i) {
    if (auto replaced = rewrite_first(t->children[i], x)) {
      auto copy = t->children;
      copy[i] = std::move(replaced);
      return target_node(t->label, std::move(copy));
    }
  }
  return nullptr;
}

}  // namespace

std::vector<std::string> target_leaves(const TargetTree& tree) {
  std::vector<std::string> out;
  collect(tree, out);
  return out;
}

std::string format_target(const TargetTree& tree) {
  if (!tree) return "()";
  if (tree->leaf) return "\"" + tree->label + "\"";
  std::string out = "(" + tree->label;
  for (const auto& c : tree->children) out += " " + format_target(c);
  return out + ")";
}

TargetTree reorder_tree(const Interpretation& interpretation, const ResourceBundle& bundle) {
  return convert(*interpretation.tree, bundle);
}

TargetTree apply_xforms(const TargetTree& tree, const std::vector<Xform>& xforms, std::size_t* rewrites) {
  TargetTree current = tree;
  std::size_t count = 0;
  if (current) {
    for (const auto& x : xforms) {
      for (std::size_t applied = 0; applied < x.max_apply; ++applied) {
        auto next = rewrite_first(current, x);
        if (!next) break;
        current = std::move(next);
        ++count;
      }
    }
  }
  if (rewrites) *rewrites = count;
  return current;
}

std::string generate_output(const TargetTree& tree) {
  auto morphemes = target_leaves(tree);
  if (morphemes.empty()) return "";
  std::string out;
  for (const auto& m : morphemes) out += m;
  return out + "。";
}

std::string realize(const Interpretation& interpretation, const ResourceBundle& bundle) {
  return generate_output(apply_xforms(reorder_tree(interpretation, bundle), bundle.xforms()));
}

}  // namespace ejmt
