#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ejmt/resources.hpp"

namespace ejmt {

/// Half-open token span [begin, end).
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t length() const { return end - begin; }
  bool contains(const Span& o) const { return begin <= o.begin && o.end <= end; }
  bool crosses(const Span& o) const {
    return (begin < o.begin && o.begin < end && end < o.end) ||
           (o.begin < begin && begin < o.end && o.end < end);
  }
  auto operator<=>(const Span&) const = default;
};

struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;

/// One derivation with exactly one sense per lexical leaf. Subtrees are
/// immutable and may be shared between trees.
struct TreeNode {
  std::string category;
  Span span;
  std::optional<std::size_t> rule;  // grammar index; empty for lexical leaves
  std::string rule_id;
  std::shared_ptr<const LexSense> sense;  // lexical leaves only
  std::vector<Tree> children;

  bool is_lexical() const { return !rule.has_value(); }
  std::size_t token() const { return span.begin; }
};

Tree make_leaf(std::string category, std::size_t token, std::shared_ptr<const LexSense> sense);
Tree make_internal(const GrammarRule& rule, std::size_t rule_index, std::vector<Tree> children);

/// Signature element for a leaf: `surface:sense_id`.
std::string leaf_signature(const LexSense& sense);

/// Pre-order rule ids and leaf senses joined with single spaces. Ids contain
/// no bytes <= 0x20, so byte order on signatures is element-wise
/// lexicographic order.
std::string signature(const TreeNode& tree);

/// Lexical leaves left to right.
std::vector<const TreeNode*> leaves(const TreeNode& tree);

/// Every constituent span in the tree, with its category, pre-order.
std::vector<std::pair<Span, std::string>> constituents(const TreeNode& tree);

/// `(cat child...)` with leaves as `(cat surface:sense)`.
std::string bracketed(const TreeNode& tree);

}  // namespace ejmt
