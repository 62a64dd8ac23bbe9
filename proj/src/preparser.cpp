#include "ejmt/preparser.hpp"

#include "text_util.hpp"

namespace ejmt {
namespace {

constexpr std::string_view kDetachable = ".,!?;:\"'()";

bool is_detachable(char c) { return kDetachable.find(c) != std::string_view::npos; }

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    auto piece = detail::trim(text.substr(start, end - start));
    if (!piece.empty()) out.emplace_back(piece);
    start = end;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if ((c == '.' || c == '!' || c == '?') && (i + 1 == text.size() || is_space(text[i + 1]))) {
      emit(i + 1);
    }
  }
  emit(text.size());
  return out;
}

std::vector<Token> tokenize(std::string_view sentence) {
  std::vector<std::string> pieces;
  for (auto word : detail::split_words(sentence)) {
    std::vector<std::string> trailing;
    while (!word.empty() && is_detachable(word.front())) {
      pieces.emplace_back(1, word.front());
      word.remove_prefix(1);
    }
    while (!word.empty() && is_detachable(word.back())) {
      trailing.emplace_back(1, word.back());
      word.remove_suffix(1);
    }
    if (!word.empty()) pieces.emplace_back(word);
    pieces.insert(pieces.end(), trailing.rbegin(), trailing.rend());
  }
  if (!pieces.empty() && pieces.back() == ".") pieces.pop_back();

  std::vector<Token> tokens;
  tokens.reserve(pieces.size());
  for (auto& p : pieces) {
    Token t;
    t.norm = detail::to_lower_ascii(p);
    t.surface = std::move(p);
    t.index = tokens.size();
    tokens.push_back(std::move(t));
  }
  return tokens;
}

}  // namespace ejmt
