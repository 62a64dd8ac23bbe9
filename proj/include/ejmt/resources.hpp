#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ejmt/taxonomy.hpp"
#include "ejmt/xform.hpp"

namespace ejmt {

/// Raised for any malformed resource line. `line()` is 1-based, 0 when the
/// problem is not tied to a single line (e.g. cross-file references).
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string file, std::size_t line, const std::string& what);
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

struct Insert {
  std::size_t position = 0;  // target position the morpheme follows
  std::string morpheme;
  bool operator==(const Insert&) const = default;
};

struct GrammarRule {
  std::string id;
  std::string lhs;
  std::vector<std::string> rhs;
  double weight = 1.0;
  std::vector<std::size_t> reorder;  // target position -> source child
  std::vector<Insert> inserts;
  bool conj = false;
  bool operator==(const GrammarRule&) const = default;
};

enum class SlotStrength { required, preferred };

struct FrameSlot {
  std::string name;      // subj, obj, or a preposition surface
  std::string expected;  // taxonomy node
  SlotStrength strength = SlotStrength::required;
  bool operator==(const FrameSlot&) const = default;
};

struct LexSense {
  std::string surface;
  std::string pos;
  std::string sense_id;
  std::string sem;
  std::string ja;
  double weight = 1.0;
  std::optional<std::vector<FrameSlot>> frame;
  bool operator==(const LexSense&) const = default;
};

using Lexicon = std::map<std::string, std::vector<LexSense>, std::less<>>;

enum class UnknownWordPolicy { noun_fallback, reject };

inline constexpr std::size_t kUnboundedBeam = static_cast<std::size_t>(-1);

struct ExpertConfig {
  double w_lex = 1.0;
  double w_rule = 1.0;
  double w_arg = 1.0;
  double w_conj = 1.0;
  double arg_bonus = 1.0;
  double arg_penalty = -2.0;
  double conj_bonus = 0.5;
  std::size_t beam = 32;  // kUnboundedBeam spells "inf"
  std::size_t kbest = 1;
  UnknownWordPolicy unknown_word_policy = UnknownWordPolicy::noun_fallback;
  bool operator==(const ExpertConfig&) const = default;
};

std::vector<GrammarRule> load_grammar(std::string_view text);
Lexicon load_lexicon(std::string_view text);
/// Also checks every sem/frame reference against `taxonomy` when non-null,
/// so cross-reference errors carry a line number.
Lexicon load_lexicon(std::string_view text, const Taxonomy* taxonomy);
Taxonomy load_taxonomy(std::string_view text);
std::vector<Xform> load_xforms(std::string_view text);
ExpertConfig load_config(std::string_view text);

std::string format_grammar(const std::vector<GrammarRule>& rules);
std::string format_lexicon(const Lexicon& lexicon);
std::string format_taxonomy(const Taxonomy& taxonomy);
std::string format_xforms(const std::vector<Xform>& xforms);
std::string format_config(const ExpertConfig& config);

std::string format_beam(std::size_t beam);
/// Accepts a positive integer or "inf".
std::optional<std::size_t> parse_beam(std::string_view text);

/// Raw text of the five resource files, in the order they are fingerprinted.
struct ResourceTexts {
  std::string grammar;
  std::string lexicon;
  std::string taxonomy;
  std::string xforms;
  std::string config;
};

struct ResourcePaths {
  std::string grammar;
  std::string lexicon;
  std::string taxonomy;
  std::string xforms;
  std::string config;
};

ResourceTexts read_resource_files(const ResourcePaths& paths);

/// Immutable compiled resources. Share through `std::shared_ptr<const>`.
class ResourceBundle {
 public:
  static std::shared_ptr<const ResourceBundle> load(const ResourceTexts& texts);
  static std::shared_ptr<const ResourceBundle> load_files(const ResourcePaths& paths);

  /// Same resources, different expert configuration. The fingerprint is
  /// recomputed over the formatted config.
  std::shared_ptr<const ResourceBundle> with_config(const ExpertConfig& config) const;

  const std::vector<GrammarRule>& grammar() const { return grammar_; }
  const Lexicon& lexicon() const { return lexicon_; }
  const Taxonomy& taxonomy() const { return taxonomy_; }
  const std::vector<Xform>& xforms() const { return xforms_; }
  const ExpertConfig& config() const { return config_; }
  const std::string& fingerprint() const { return fingerprint_; }

  const std::vector<LexSense>* senses(std::string_view surface) const;
  std::size_t sense_count() const;
  std::optional<std::size_t> rule_index(std::string_view id) const;

  /// Canonical text form; loading it yields an equal bundle.
  ResourceTexts to_texts() const;

  bool same_content(const ResourceBundle& other) const;

 private:
  ResourceBundle() = default;
  void validate() const;

  std::vector<GrammarRule> grammar_;
  Lexicon lexicon_;
  Taxonomy taxonomy_;
  std::vector<Xform> xforms_;
  ExpertConfig config_;
  std::string fingerprint_;
  std::map<std::string, std::size_t, std::less<>> rule_ids_;
};

std::string sha256_hex(std::string_view data);

}  // namespace ejmt
