#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ejmt {

struct Token {
  std::string surface;
  std::string norm;  // lowercase lookup key
  std::size_t index = 0;
  bool operator==(const Token&) const = default;
};

/// Splits after `.`, `!` or `?` followed by whitespace or end of input.
std::vector<std::string> split_sentences(std::string_view text);

/// Whitespace tokenization with leading/trailing `.,!?;:"'()` detached as
/// one-character tokens. A sentence-final `.` is dropped.
std::vector<Token> tokenize(std::string_view sentence);

}  // namespace ejmt
