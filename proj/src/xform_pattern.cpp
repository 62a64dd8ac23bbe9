#include "ejmt/xform.hpp"

#include <cctype>
#include <stdexcept>

namespace ejmt {
namespace {

bool is_symbol_char(char c) {
  return c != '(' && c != ')' && c != '"' && c != '$' &&
         !std::isspace(static_cast<unsigned char>(c));
}

class PatternReader {
 public:
  explicit PatternReader(std::string_view text) : text_(text) {}

  TreePattern read_top() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("pattern must start with '('");
    TreePattern p = read_node();
    skip_space();
    if (pos_ != text_.size()) fail("unbalanced parentheses: trailing text");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument(msg + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string read_symbol() {
    const auto start = pos_;
    while (pos_ < text_.size() && is_symbol_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a symbol");
    return std::string(text_.substr(start, pos_ - start));
  }

  TreePattern read_node() {
    ++pos_;  // '('
    skip_space();
    TreePattern node;
    node.kind = TreePattern::Kind::node;
    node.text = read_symbol();
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) fail("unbalanced parentheses");
      const char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        return node;
      }
      node.children.push_back(read_item());
    }
  }

  TreePattern read_item() {
    const char c = text_[pos_];
    if (c == '(') return read_node();
    if (c == '$') {
      ++pos_;
      TreePattern v;
      v.kind = TreePattern::Kind::variable;
      v.text = read_symbol();
      return v;
    }
    if (c == '"') {
      ++pos_;
      const auto end = text_.find('"', pos_);
      if (end == std::string_view::npos) fail("unterminated literal");
      TreePattern lit;
      lit.kind = TreePattern::Kind::literal;
      lit.text = std::string(text_.substr(pos_, end - pos_));
      pos_ = end + 1;
      return lit;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_variables(const TreePattern& p, std::vector<std::string>& out) {
  if (p.kind == TreePattern::Kind::variable) {
    for (const auto& v : out) {
      if (v == p.text) return;
    }
    out.push_back(p.text);
    return;
  }
  for (const auto& c : p.children) collect_variables(c, out);
}

}  // namespace

TreePattern parse_tree_pattern(std::string_view text) { return PatternReader(text).read_top(); }

std::string format_tree_pattern(const TreePattern& pattern) {
  switch (pattern.kind) {
    case TreePattern::Kind::variable:
      return "$" + pattern.text;
    case TreePattern::Kind::literal:
      return "\"" + pattern.text + "\"";
    case TreePattern::Kind::node:
      break;
  }
  std::string out = "(" + pattern.text;
  for (const auto& c : pattern.children) out += " " + format_tree_pattern(c);
  return out + ")";
}

std::vector<std::string> pattern_variables(const TreePattern& pattern) {
  std::vector<std::string> out;
  collect_variables(pattern, out);
  return out;
}

}  // namespace ejmt
