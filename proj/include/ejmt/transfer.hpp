#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ejmt/forest.hpp"
#include "ejmt/interpretation.hpp"
#include "ejmt/preparser.hpp"
#include "ejmt/resources.hpp"
#include "ejmt/xform.hpp"

namespace ejmt {

struct TargetNode;
using TargetTree = std::shared_ptr<const TargetNode>;

/// Target-order tree. Leaves are morphemes; internal nodes keep the source
/// category. A null TargetTree is the empty tree.
struct TargetNode {
  std::string label;
  bool leaf = false;
  std::vector<TargetTree> children;
};

TargetTree target_leaf(std::string morpheme);
TargetTree target_node(std::string label, std::vector<TargetTree> children);
bool same_tree(const TargetTree& a, const TargetTree& b);
std::vector<std::string> target_leaves(const TargetTree& tree);
std::string format_target(const TargetTree& tree);

/// Sister reordering and particle insertion per rule annotations.
TargetTree reorder_tree(const Interpretation& interpretation, const ResourceBundle& bundle);

/// Each xform in order, rewriting the first pre-order match up to max_apply
/// times. `rewrites`, when given, receives the number of rewrites made.
TargetTree apply_xforms(const TargetTree& tree, const std::vector<Xform>& xforms, std::size_t* rewrites = nullptr);

/// Leaf morphemes concatenated plus "。"; "" for an empty tree.
std::string generate_output(const TargetTree& tree);

/// reorder -> xforms -> generate.
std::string realize(const Interpretation& interpretation, const ResourceBundle& bundle);

enum class SentenceStatus { ok, no_parse, unknown_token, constraints_unsatisfiable };

std::string_view status_name(SentenceStatus status);

struct Alternative {
  std::string signature;
  double total = 0;
  std::string japanese;
};

struct SentenceResult {
  std::string text;
  std::vector<Token> tokens;
  SentenceStatus status = SentenceStatus::ok;
  std::string message;
  std::string japanese;
  std::optional<Interpretation> best;
  BigCount parse_count = 0;
  std::optional<double> log10_count;
  std::vector<Alternative> alternatives;
};

struct TranslateOptions {
  std::optional<std::size_t> beam;   // defaults to config.beam
  std::optional<std::size_t> kbest;  // defaults to config.kbest
};

enum class Execution { serial, parallel };

/// Full pipeline for one tokenized sentence. Never throws for linguistic
/// failures; they land in `status`.
SentenceResult translate_sentence(std::string text, const std::shared_ptr<const ResourceBundle>& bundle,
                                  const Constraints& constraints, const TranslateOptions& options = {});

/// Splits `text` into sentences and translates each. `constraints` bind to
/// the first sentence; they are validated up front and a ConstraintError is
/// thrown when they do not fit it.
std::vector<SentenceResult> translate(std::string_view text, const std::shared_ptr<const ResourceBundle>& bundle,
                                      const Constraints& constraints = {}, const TranslateOptions& options = {},
                                      Execution execution = Execution::parallel);

/// Independent sentences, translated unconstrained. Results follow input
/// order whatever the execution mode.
std::vector<SentenceResult> translate_sentences(const std::vector<std::string>& sentences,
                                                const std::shared_ptr<const ResourceBundle>& bundle,
                                                const TranslateOptions& options = {},
                                                Execution execution = Execution::parallel);

}  // namespace ejmt
