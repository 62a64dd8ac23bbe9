#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ejmt/derivation.hpp"
#include "ejmt/preparser.hpp"
#include "ejmt/resources.hpp"

namespace ejmt {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr const char* kStartSymbol = "s";
inline constexpr std::size_t kUnlimited = static_cast<std::size_t>(-1);

/// The token at [i, i+1) read as any of these senses (all share one pos).
struct LexicalDerivation {
  std::vector<std::shared_ptr<const LexSense>> senses;
};

struct RuleDerivation {
  std::size_t rule = 0;               // grammar index
  std::vector<std::size_t> children;  // forest node ids, in rhs order
};

using Derivation = std::variant<LexicalDerivation, RuleDerivation>;

struct ForestNode {
  std::string category;
  Span span;
  std::vector<Derivation> alternatives;
};

class UnknownTokenError : public std::runtime_error {
 public:
  UnknownTokenError(std::string surface, std::size_t index)
      : std::runtime_error("unknown token " + surface + " at " + std::to_string(index)),
        surface_(std::move(surface)),
        index_(index) {}
  const std::string& surface() const { return surface_; }
  std::size_t index() const { return index_; }

 private:
  std::string surface_;
  std::size_t index_;
};

/// Shared packed parse forest. Nodes are keyed by (category, span); node ids
/// are topologically ordered (children before parents).
class Forest {
 public:
  Forest(const Forest&) = delete;
  Forest& operator=(const Forest&) = delete;
  Forest(Forest&&) = default;
  Forest& operator=(Forest&&) = default;

  const std::vector<Token>& tokens() const { return tokens_; }
  const std::vector<ForestNode>& nodes() const { return nodes_; }
  const ForestNode& node(std::size_t id) const { return nodes_.at(id); }
  std::optional<std::size_t> root() const { return root_; }
  /// Longest span any node covers; diagnostics for rootless forests.
  std::optional<Span> longest_span() const { return longest_span_; }
  const ResourceBundle& bundle() const { return *bundle_; }
  const std::shared_ptr<const ResourceBundle>& bundle_ptr() const { return bundle_; }

 private:
  friend Forest parse_to_forest(std::vector<Token>, std::shared_ptr<const ResourceBundle>);
  Forest() = default;

  std::vector<Token> tokens_;
  std::vector<ForestNode> nodes_;
  std::optional<std::size_t> root_;
  std::optional<Span> longest_span_;
  std::shared_ptr<const ResourceBundle> bundle_;
};

/// All parses of `tokens`, packed. Throws UnknownTokenError under the reject
/// policy; a sentence with no complete parse yields a rootless forest.
Forest parse_to_forest(std::vector<Token> tokens, std::shared_ptr<const ResourceBundle> bundle);

/// Exact number of distinct derivation trees, senses included. 0 when rootless.
BigCount count_parses(const Forest& forest);

/// log10 of a positive count; nullopt for zero.
std::optional<double> log10_count(const BigCount& count);

/// The `limit` trees with smallest signatures, in signature order.
std::vector<Tree> enumerate_trees(const Forest& forest, std::size_t limit);

/// One line per node, `[cat i j (alt)(alt)]`, sorted by (i, -j, cat).
std::string serialize_forest(const Forest& forest);

}  // namespace ejmt
