#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace ejmt::detail {

inline constexpr std::string_view kCatS = "s";
inline constexpr std::string_view kCatVp = "vp";
inline constexpr std::string_view kCatNp = "np";
inline constexpr std::string_view kCatPp = "pp";
inline constexpr std::string_view kCatN = "n";
inline constexpr std::string_view kCatP = "p";

inline constexpr std::string_view kSlotSubj = "subj";
inline constexpr std::string_view kSlotObj = "obj";

/// Which child carries the head of a phrase. Lexical nodes head themselves;
/// categories not listed here have no head.
///   np: first np or n child      vp: first vp child, else first lexical child
///   pp: first np child           s:  first vp child
enum class HeadPick { none, np_or_n, vp_or_lexical, np, vp };

inline HeadPick head_pick(std::string_view category) {
  if (category == kCatNp) return HeadPick::np_or_n;
  if (category == kCatVp) return HeadPick::vp_or_lexical;
  if (category == kCatPp) return HeadPick::np;
  if (category == kCatS) return HeadPick::vp;
  return HeadPick::none;
}

/// Index of the head child among `count` children; `category_of(i)` and
/// `is_lexical(i)` describe child i.
template <class CategoryOf, class IsLexical>
std::optional<std::size_t> head_child(std::string_view category, std::size_t count, CategoryOf category_of,
                                      IsLexical is_lexical) {
  auto first = [&](auto pred) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  };
  switch (head_pick(category)) {
    case HeadPick::np_or_n:
      return first([&](std::size_t i) { return category_of(i) == kCatNp || category_of(i) == kCatN; });
    case HeadPick::vp_or_lexical:
      if (auto vp = first([&](std::size_t i) { return category_of(i) == kCatVp; })) return vp;
      return first([&](std::size_t i) { return is_lexical(i); });
    case HeadPick::np:
      return first([&](std::size_t i) { return category_of(i) == kCatNp; });
    case HeadPick::vp:
      return first([&](std::size_t i) { return category_of(i) == kCatVp; });
    case HeadPick::none:
      break;
  }
  return std::nullopt;
}

}  // namespace ejmt::detail
