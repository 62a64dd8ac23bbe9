#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ejmt {

/// Tree pattern / template in parenthesized form:
///   (label item*)   item := pattern | $var | "literal"
struct TreePattern {
  enum class Kind { node, variable, literal };
  Kind kind = Kind::node;
  std::string text;  // label, variable name (without `$`), or literal morpheme
  std::vector<TreePattern> children;

  bool operator==(const TreePattern&) const = default;
};

struct Xform {
  std::string id;
  TreePattern pattern;
  TreePattern rewrite;
  std::size_t max_apply = 1;
  bool operator==(const Xform&) const = default;
};

/// Throws std::invalid_argument on syntax errors.
TreePattern parse_tree_pattern(std::string_view text);
std::string format_tree_pattern(const TreePattern& pattern);

/// Variables in first-occurrence order.
std::vector<std::string> pattern_variables(const TreePattern& pattern);

}  // namespace ejmt
