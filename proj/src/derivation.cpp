#include "ejmt/derivation.hpp"

namespace ejmt {

Tree make_leaf(std::string category, std::size_t token, std::shared_ptr<const LexSense> sense) {
  auto node = std::make_shared<TreeNode>();
  node->category = std::move(category);
  node->span = {token, token + 1};
  node->sense = std::move(sense);
  return node;
}

Tree make_internal(const GrammarRule& rule, std::size_t rule_index, std::vector<Tree> children) {
  auto node = std::make_shared<TreeNode>();
  node->category = rule.lhs;
  node->span = {children.front()->span.begin, children.back()->span.end};
  node->rule = rule_index;
  node->rule_id = rule.id;
  node->children = std::move(children);
  return node;
}

std::string leaf_signature(const LexSense& sense) { return sense.surface + ":" + sense.sense_id; }

namespace {

void append_signature(const TreeNode& t, std::string& out) {
  if (!out.empty()) out += ' ';
  if (t.is_lexical()) {
    out += leaf_signature(*t.sense);
    return;
  }
  out += t.rule_id;
  for (const auto& c : t.children) append_signature(*c, out);
}

void collect_leaves(const TreeNode& t, std::vector<const TreeNode*>& out) {
  if (t.is_lexical()) {
    out.push_back(&t);
    return;
  }
  for (const auto& c : t.children) collect_leaves(*c, out);
}

void collect_constituents(const TreeNode& t, std::vector<std::pair<Span, std::string>>& out) {
  out.emplace_back(t.span, t.category);
  for (const auto& c : t.children) collect_constituents(*c, out);
}

}  // namespace

std::string signature(const TreeNode& tree) {
  std::string out;
  append_signature(tree, out);
  return out;
}

std::vector<const TreeNode*> leaves(const TreeNode& tree) {
  std::vector<const TreeNode*> out;
  collect_leaves(tree, out);
  return out;
}

std::vector<std::pair<Span, std::string>> constituents(const TreeNode& tree) {
  std::vector<std::pair<Span, std::string>> out;
  collect_constituents(tree, out);
  return out;
}

std::string bracketed(const TreeNode& tree) {
  if (tree.is_lexical()) return "(" + tree.category + " " + leaf_signature(*tree.sense) + ")";
  std::string out = "(" + tree.category;
  for (const auto& c : tree.children) out += " " + bracketed(*c);
  return out + ")";
}

}  // namespace ejmt
