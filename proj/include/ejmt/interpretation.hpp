#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ejmt/derivation.hpp"
#include "ejmt/forest.hpp"
#include "ejmt/resources.hpp"

namespace ejmt {

/// Per-expert raw scores; `total` is the config-weighted sum.
struct ScoreBreakdown {
  double s_lex = 0;
  double s_rule = 0;
  double s_arg = 0;
  double s_conj = 0;
  double total = 0;

  static double weighted(double lex, double rule, double arg, double conj, const ExpertConfig& c) {
    return c.w_lex * lex + c.w_rule * rule + c.w_arg * arg + c.w_conj * conj;
  }
};

struct Interpretation {
  Tree tree;
  ScoreBreakdown breakdown;
  std::string signature;
};

struct RequiredSpan {
  Span span;
  std::optional<std::string> category;
  bool operator==(const RequiredSpan&) const = default;
};

struct PinnedSense {
  std::size_t token = 0;
  std::string sense_id;
  bool operator==(const PinnedSense&) const = default;
};

struct Constraints {
  std::vector<RequiredSpan> required_spans;
  std::vector<Span> forbidden_spans;
  std::vector<PinnedSense> pinned_senses;

  bool empty() const { return required_spans.empty() && forbidden_spans.empty() && pinned_senses.empty(); }
  bool operator==(const Constraints&) const = default;
};

inline constexpr std::size_t kMaxRequiredSpans = 64;
inline constexpr std::size_t kDefaultOracleCap = 100000;

/// Constraint refers to something that does not exist for this sentence.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InterpretationError : public std::runtime_error {
 public:
  enum class Kind { no_parse, unsatisfiable, oracle_cap_exceeded };
  InterpretationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Throws ConstraintError when a span is out of bounds or a pinned sense is
/// not listed for that token's surface.
void validate_constraints(const Constraints& constraints, const std::vector<Token>& tokens,
                          const ResourceBundle& bundle);

/// Tree-walk evaluation of all four experts. Throws std::logic_error on a
/// tree whose categories disagree with its rules.
ScoreBreakdown score_tree(const TreeNode& tree, const ResourceBundle& bundle);

bool satisfies(const TreeNode& tree, const Constraints& constraints);

/// Higher total first; totals equal to 1e-9 fall back to the smaller
/// signature.
bool ranks_before(double total_a, const std::string& sig_a, double total_b, const std::string& sig_b);
bool ranks_before(const Interpretation& a, const Interpretation& b);

/// Bottom-up incremental scoring with at most `beam` partial analyses per
/// forest node. Returns up to `k` interpretations, best first.
std::vector<Interpretation> kbest_interpretations(const Forest& forest, const ResourceBundle& bundle,
                                                  const Constraints& constraints, std::size_t beam,
                                                  std::size_t k);

Interpretation select_best(const Forest& forest, const ResourceBundle& bundle, const Constraints& constraints);

/// Exhaustive enumeration + score_tree; the reference for the beam search.
Interpretation oracle_select(const Forest& forest, const ResourceBundle& bundle, const Constraints& constraints,
                             std::size_t cap = kDefaultOracleCap);

}  // namespace ejmt
