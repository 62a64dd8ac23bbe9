#include "ejmt/resources.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "text_util.hpp"

namespace ejmt {

ResourceError::ResourceError(std::string file, std::size_t line, const std::string& what)
    : std::runtime_error(file + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
      file_(std::move(file)),
      line_(line) {}

namespace {

using detail::split_fields;
using detail::split_words;
using detail::to_lower_ascii;
using detail::trim;

struct Line {
  std::size_t number;
  std::string_view text;
};

/// Non-blank lines with `#` comments removed. A `#` inside double quotes is
/// kept.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

std::optional<double> parse_decimal(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<std::size_t> parse_count(std::string_view text) {
  text = trim(text);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

std::string format_decimal(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), ptr);
}

std::pair<std::string_view, std::string_view> split_key_value(std::string_view field) {
  auto eq = field.find('=');
  if (eq == std::string_view::npos) return {trim(field), {}};
  return {trim(field.substr(0, eq)), trim(field.substr(eq + 1))};
}

std::string unquote(std::string_view text, const char* file, std::size_t line) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '"' || text.back() != '"') {
    throw ResourceError(file, line, "expected a quoted morpheme, got " + std::string(text));
  }
  return std::string(text.substr(1, text.size() - 2));
}

GrammarRule parse_rule(const Line& line) {
  constexpr const char* kFile = "grammar";
  auto fields = split_fields(line.text);
  auto head = split_words(fields.front());
  if (head.size() < 4 || head[0] != "rule" || head[3] != "->") {
    throw ResourceError(kFile, line.number, "expected `rule <id> <lhs> -> <rhs...>`");
  }
  GrammarRule rule;
  rule.id = std::string(head[1]);
  if (!valid_id(rule.id)) throw ResourceError(kFile, line.number, "invalid rule id " + rule.id);
  rule.lhs = std::string(head[2]);
  for (std::size_t i = 4; i < head.size(); ++i) rule.rhs.emplace_back(head[i]);
  if (rule.rhs.empty() || rule.rhs.size() > 8) {
    throw ResourceError(kFile, line.number, "rule must have 1..8 right-hand-side categories");
  }
  bool saw_reorder = false;
  for (std::size_t f = 1; f < fields.size(); ++f) {
    auto [key, value] = split_key_value(fields[f]);
    if (key == "weight") {
      auto w = parse_decimal(value);
      if (!w) throw ResourceError(kFile, line.number, "bad weight " + std::string(value));
      rule.weight = *w;
    } else if (key == "reorder") {
      saw_reorder = true;
      rule.reorder.clear();
      for (auto part : detail::split(value, ',')) {
        auto idx = parse_count(part);
        if (!idx) throw ResourceError(kFile, line.number, "bad reorder index " + std::string(part));
        rule.reorder.push_back(*idx);
      }
    } else if (key == "insert") {
      for (auto part : detail::split_quoted(value, ',')) {
        auto colon = part.find(':');
        if (colon == std::string_view::npos) {
          throw ResourceError(kFile, line.number, "insert must be <pos>:\"morpheme\"");
        }
        auto pos = parse_count(part.substr(0, colon));
        if (!pos) throw ResourceError(kFile, line.number, "bad insert position");
        rule.inserts.push_back({*pos, unquote(part.substr(colon + 1), kFile, line.number)});
      }
    } else if (key == "conj") {
      if (!value.empty() && value != "true") {
        throw ResourceError(kFile, line.number, "conj takes no value");
      }
      rule.conj = true;
    } else {
      throw ResourceError(kFile, line.number, "unknown field " + std::string(key));
    }
  }
  if (!saw_reorder) {
    rule.reorder.resize(rule.rhs.size());
    for (std::size_t i = 0; i < rule.rhs.size(); ++i) rule.reorder[i] = i;
  }
  std::vector<bool> seen(rule.rhs.size(), false);
  bool permutation = rule.reorder.size() == rule.rhs.size();
  for (auto idx : rule.reorder) {
    if (!permutation || idx >= seen.size() || seen[idx]) {
      permutation = false;
      break;
    }
    seen[idx] = true;
  }
  if (!permutation) throw ResourceError(kFile, line.number, "reorder is not a permutation");
  for (const auto& ins : rule.inserts) {
    if (ins.position >= rule.rhs.size()) {
      throw ResourceError(kFile, line.number, "insert position out of range");
    }
  }
  return rule;
}

std::vector<FrameSlot> parse_frame(std::string_view value, const Taxonomy* taxonomy,
                                   std::size_t line) {
  constexpr const char* kFile = "lexicon";
  std::vector<FrameSlot> frame;
  for (auto part : detail::split(value, ',')) {
    auto [name, rest] = split_key_value(part);
    auto colon = rest.find(':');
    if (name.empty() || colon == std::string_view::npos) {
      throw ResourceError(kFile, line, "frame slot must be name=sem:req|pref");
    }
    FrameSlot slot;
    slot.name = to_lower_ascii(name);
    slot.expected = std::string(trim(rest.substr(0, colon)));
    auto tag = trim(rest.substr(colon + 1));
    if (tag == "req") {
      slot.strength = SlotStrength::required;
    } else if (tag == "pref") {
      slot.strength = SlotStrength::preferred;
    } else {
      throw ResourceError(kFile, line, "unknown strength tag " + std::string(tag));
    }
    if (taxonomy && !taxonomy->contains(slot.expected)) {
      throw ResourceError(kFile, line, "unknown sem " + slot.expected + " in frame");
    }
    for (const auto& other : frame) {
      if (other.name == slot.name) throw ResourceError(kFile, line, "duplicate frame slot " + slot.name);
    }
    frame.push_back(std::move(slot));
  }
  return frame;
}

bool has_unary_cycle(const std::vector<GrammarRule>& rules, std::string& where) {
  std::map<std::string, std::vector<std::string>> edges;
  for (const auto& r : rules) {
    if (r.rhs.size() == 1) edges[r.lhs].push_back(r.rhs[0]);
  }
  std::map<std::string, int> state;
  std::function<bool(const std::string&)> visit = [&](const std::string& cat) {
    auto& s = state[cat];
    if (s == 1) {
      where = cat;
      return true;
    }
    if (s == 2) return false;
    s = 1;
    if (auto it = edges.find(cat); it != edges.end()) {
      for (const auto& next : it->second) {
        if (visit(next)) return true;
      }
    }
    state[cat] = 2;
    return false;
  };
  for (const auto& [cat, _] : edges) {
    if (visit(cat)) return true;
  }
  return false;
}

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError(what, 0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<GrammarRule> load_grammar(std::string_view text) {
  std::vector<GrammarRule> rules;
  std::set<std::string, std::less<>> ids;
  for (const auto& line : content_lines(text)) {
    auto first = split_words(line.text);
    if (first.empty() || first[0] != "rule") {
      throw ResourceError("grammar", line.number, "unknown directive " + std::string(first.empty() ? "" : first[0]));
    }
    auto rule = parse_rule(line);
    if (!ids.insert(rule.id).second) {
      throw ResourceError("grammar", line.number, "duplicate rule id " + rule.id);
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

Lexicon load_lexicon(std::string_view text, const Taxonomy* taxonomy) {
  constexpr const char* kFile = "lexicon";
  Lexicon lexicon;
  for (const auto& line : content_lines(text)) {
    auto fields = split_fields(line.text);
    auto head = split_words(fields.front());
    if (head.empty() || head[0] != "lex") {
      throw ResourceError(kFile, line.number, "unknown directive " + std::string(head.empty() ? "" : head[0]));
    }
    if (head.size() != 2) throw ResourceError(kFile, line.number, "expected `lex <surface>`");
    LexSense sense;
    sense.surface = to_lower_ascii(head[1]);
    bool has_pos = false, has_sense = false, has_sem = false;
    for (std::size_t f = 1; f < fields.size(); ++f) {
      auto [key, value] = split_key_value(fields[f]);
      if (key == "pos") {
        sense.pos = std::string(value);
        has_pos = !value.empty();
      } else if (key == "sense") {
        sense.sense_id = std::string(value);
        has_sense = valid_id(value);
      } else if (key == "sem") {
        sense.sem = std::string(value);
        has_sem = !value.empty();
      } else if (key == "ja") {
        sense.ja = std::string(value);
      } else if (key == "weight") {
        auto w = parse_decimal(value);
        if (!w) throw ResourceError(kFile, line.number, "bad weight " + std::string(value));
        sense.weight = *w;
      } else if (key == "frame") {
        sense.frame = parse_frame(value, taxonomy, line.number);
      } else {
        throw ResourceError(kFile, line.number, "unknown field " + std::string(key));
      }
    }
    if (!has_pos || !has_sense || !has_sem) {
      throw ResourceError(kFile, line.number, "lex entry needs pos, sense (id) and sem");
    }
    if (taxonomy && !taxonomy->contains(sense.sem)) {
      throw ResourceError(kFile, line.number, "unknown sem " + sense.sem);
    }
    auto& senses = lexicon[sense.surface];
    for (const auto& other : senses) {
      if (other.sense_id == sense.sense_id) {
        throw ResourceError(kFile, line.number,
                            "duplicate sense " + sense.surface + ":" + sense.sense_id);
      }
    }
    senses.push_back(std::move(sense));
  }
  return lexicon;
}

Lexicon load_lexicon(std::string_view text) { return load_lexicon(text, nullptr); }

Taxonomy load_taxonomy(std::string_view text) {
  constexpr const char* kFile = "taxonomy";
  std::vector<Taxonomy::Entry> entries;
  std::vector<std::size_t> line_numbers;
  for (const auto& line : content_lines(text)) {
    auto words = split_words(line.text);
    if (words[0] != "sem") throw ResourceError(kFile, line.number, "unknown directive " + std::string(words[0]));
    if (words.size() == 2) {
      entries.push_back({std::string(words[1]), std::nullopt});
    } else if (words.size() == 4 && words[2] == "isa") {
      entries.push_back({std::string(words[1]), std::string(words[3])});
    } else {
      throw ResourceError(kFile, line.number, "expected `sem <name>` or `sem <child> isa <parent>`");
    }
    line_numbers.push_back(line.number);
  }
  if (entries.empty()) throw ResourceError(kFile, 0, "taxonomy has no root");
  try {
    return Taxonomy::build(entries);
  } catch (const TaxonomyError& e) {
    throw ResourceError(kFile, line_numbers.at(e.entry()), e.what());
  }
}

std::vector<Xform> load_xforms(std::string_view text) {
  constexpr const char* kFile = "xforms";
  std::vector<Xform> xforms;
  std::set<std::string, std::less<>> ids;
  for (const auto& line : content_lines(text)) {
    auto fields = split_fields(line.text);
    auto head = split_words(fields.front());
    if (head.empty() || head[0] != "xform") {
      throw ResourceError(kFile, line.number, "unknown directive " + std::string(head.empty() ? "" : head[0]));
    }
    if (head.size() != 2 || !valid_id(head[1])) throw ResourceError(kFile, line.number, "expected `xform <id>`");
    Xform x;
    x.id = std::string(head[1]);
    bool has_match = false, has_rewrite = false;
    for (std::size_t f = 1; f < fields.size(); ++f) {
      auto [key, value] = split_key_value(fields[f]);
      try {
        if (key == "match") {
          x.pattern = parse_tree_pattern(value);
          has_match = true;
        } else if (key == "rewrite") {
          x.rewrite = parse_tree_pattern(value);
          has_rewrite = true;
        } else if (key == "max") {
          auto n = parse_count(value);
          if (!n || *n < 1) throw ResourceError(kFile, line.number, "max must be a positive integer");
          x.max_apply = *n;
        } else {
          throw ResourceError(kFile, line.number, "unknown field " + std::string(key));
        }
      } catch (const std::invalid_argument& e) {
        throw ResourceError(kFile, line.number, e.what());
      }
    }
    if (!has_match || !has_rewrite) throw ResourceError(kFile, line.number, "xform needs match and rewrite");
    auto bound = pattern_variables(x.pattern);
    for (const auto& v : pattern_variables(x.rewrite)) {
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
        throw ResourceError(kFile, line.number, "unbound variable $" + v);
      }
    }
    if (!ids.insert(x.id).second) throw ResourceError(kFile, line.number, "duplicate xform id " + x.id);
    xforms.push_back(std::move(x));
  }
  return xforms;
}

std::optional<std::size_t> parse_beam(std::string_view text) {
  text = trim(text);
  if (text == "inf") return kUnboundedBeam;
  auto n = parse_count(text);
  if (!n || *n < 1) return std::nullopt;
  return n;
}

std::string format_beam(std::size_t beam) {
  return beam == kUnboundedBeam ? std::string("inf") : std::to_string(beam);
}

ExpertConfig load_config(std::string_view text) {
  constexpr const char* kFile = "config";
  ExpertConfig config;
  const std::map<std::string_view, double ExpertConfig::*> decimals = {
      {"w_lex", &ExpertConfig::w_lex},         {"w_rule", &ExpertConfig::w_rule},
      {"w_arg", &ExpertConfig::w_arg},         {"w_conj", &ExpertConfig::w_conj},
      {"arg_bonus", &ExpertConfig::arg_bonus}, {"arg_penalty", &ExpertConfig::arg_penalty},
      {"conj_bonus", &ExpertConfig::conj_bonus}};
  std::set<std::string, std::less<>> seen;
  for (const auto& line : content_lines(text)) {
    auto [key, value] = split_key_value(line.text);
    if (line.text.find('=') == std::string_view::npos) {
      throw ResourceError(kFile, line.number, "expected key=value");
    }
    if (!seen.insert(std::string(key)).second) {
      throw ResourceError(kFile, line.number, "duplicate key " + std::string(key));
    }
    if (auto it = decimals.find(key); it != decimals.end()) {
      auto v = parse_decimal(value);
      if (!v) throw ResourceError(kFile, line.number, "bad decimal for " + std::string(key));
      config.*(it->second) = *v;
    } else if (key == "beam") {
      auto b = parse_beam(value);
      if (!b) throw ResourceError(kFile, line.number, "beam must be a positive integer or inf");
      config.beam = *b;
    } else if (key == "kbest") {
      auto k = parse_count(value);
      if (!k || *k < 1) throw ResourceError(kFile, line.number, "kbest must be a positive integer");
      config.kbest = *k;
    } else if (key == "unknown_word_policy") {
      if (value == "noun_fallback") {
        config.unknown_word_policy = UnknownWordPolicy::noun_fallback;
      } else if (value == "reject") {
        config.unknown_word_policy = UnknownWordPolicy::reject;
      } else {
        throw ResourceError(kFile, line.number, "unknown_word_policy must be noun_fallback or reject");
      }
    } else {
      throw ResourceError(kFile, line.number, "unknown key " + std::string(key));
    }
  }
  for (const char* key : {"w_lex", "w_rule", "w_arg", "w_conj", "arg_bonus", "arg_penalty",
                          "conj_bonus", "beam", "kbest", "unknown_word_policy"}) {
    if (!seen.count(key)) throw ResourceError(kFile, 0, std::string("missing key ") + key);
  }
  return config;
}

std::string format_grammar(const std::vector<GrammarRule>& rules) {
  std::string out;
  for (const auto& r : rules) {
    out += "rule " + r.id + " " + r.lhs + " ->";
    for (const auto& c : r.rhs) out += " " + c;
    if (r.weight != 1.0) out += " ; weight=" + format_decimal(r.weight);
    bool identity = true;
    for (std::size_t i = 0; i < r.reorder.size(); ++i) identity = identity && r.reorder[i] == i;
    if (!identity) {
      out += " ; reorder=";
      for (std::size_t i = 0; i < r.reorder.size(); ++i) {
        out += (i ? "," : "") + std::to_string(r.reorder[i]);
      }
    }
    if (!r.inserts.empty()) {
      out += " ; insert=";
      for (std::size_t i = 0; i < r.inserts.size(); ++i) {
        out += (i ? "," : "") + std::to_string(r.inserts[i].position) + ":\"" + r.inserts[i].morpheme + "\"";
      }
    }
    if (r.conj) out += " ; conj";
    out += "\n";
  }
  return out;
}

std::string format_lexicon(const Lexicon& lexicon) {
  std::string out;
  for (const auto& [surface, senses] : lexicon) {
    for (const auto& s : senses) {
      out += "lex " + surface + " ; pos=" + s.pos + " ; sense=" + s.sense_id + " ; sem=" + s.sem +
             " ; ja=" + s.ja + " ; weight=" + format_decimal(s.weight);
      if (s.frame) {
        out += " ; frame=";
        for (std::size_t i = 0; i < s.frame->size(); ++i) {
          const auto& slot = (*s.frame)[i];
          out += (i ? "," : "") + slot.name + "=" + slot.expected + ":" +
                 (slot.strength == SlotStrength::required ? "req" : "pref");
        }
      }
      out += "\n";
    }
  }
  return out;
}

std::string format_taxonomy(const Taxonomy& taxonomy) {
  std::string out;
  for (const auto& n : taxonomy.nodes()) {
    out += "sem " + n.name;
    if (n.parent) out += " isa " + taxonomy.node(*n.parent).name;
    out += "\n";
  }
  return out;
}

std::string format_xforms(const std::vector<Xform>& xforms) {
  std::string out;
  for (const auto& x : xforms) {
    out += "xform " + x.id + " ; match=" + format_tree_pattern(x.pattern) +
           " ; rewrite=" + format_tree_pattern(x.rewrite) + " ; max=" + std::to_string(x.max_apply) + "\n";
  }
  return out;
}

std::string format_config(const ExpertConfig& c) {
  std::string out;
  out += "w_lex=" + format_decimal(c.w_lex) + "\n";
  out += "w_rule=" + format_decimal(c.w_rule) + "\n";
  out += "w_arg=" + format_decimal(c.w_arg) + "\n";
  out += "w_conj=" + format_decimal(c.w_conj) + "\n";
  out += "arg_bonus=" + format_decimal(c.arg_bonus) + "\n";
  out += "arg_penalty=" + format_decimal(c.arg_penalty) + "\n";
  out += "conj_bonus=" + format_decimal(c.conj_bonus) + "\n";
  out += "beam=" + format_beam(c.beam) + "\n";
  out += "kbest=" + std::to_string(c.kbest) + "\n";
  out += std::string("unknown_word_policy=") +
         (c.unknown_word_policy == UnknownWordPolicy::reject ? "reject" : "noun_fallback") + "\n";
  return out;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  hex.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

namespace {

std::string fingerprint_of(const ResourceTexts& t) {
  std::string blob;
  for (const auto* part : {&t.grammar, &t.lexicon, &t.taxonomy, &t.xforms, &t.config}) {
    blob += std::to_string(part->size());
    blob += '\n';
    blob += *part;
  }
  return sha256_hex(blob);
}

}  // namespace

std::shared_ptr<const ResourceBundle> ResourceBundle::load(const ResourceTexts& texts) {
  std::shared_ptr<ResourceBundle> b(new ResourceBundle());
  b->taxonomy_ = load_taxonomy(texts.taxonomy);
  b->lexicon_ = load_lexicon(texts.lexicon, &b->taxonomy_);
  b->grammar_ = load_grammar(texts.grammar);
  b->xforms_ = load_xforms(texts.xforms);
  b->config_ = load_config(texts.config);
  for (std::size_t i = 0; i < b->grammar_.size(); ++i) b->rule_ids_.emplace(b->grammar_[i].id, i);
  b->validate();
  b->fingerprint_ = fingerprint_of(texts);
  return b;
}

std::shared_ptr<const ResourceBundle> ResourceBundle::load_files(const ResourcePaths& paths) {
  return load(read_resource_files(paths));
}

std::shared_ptr<const ResourceBundle> ResourceBundle::with_config(const ExpertConfig& config) const {
  std::shared_ptr<ResourceBundle> b(new ResourceBundle(*this));
  b->config_ = config;
  auto texts = to_texts();
  texts.config = format_config(config);
  b->fingerprint_ = fingerprint_of(texts);
  return b;
}

ResourceTexts read_resource_files(const ResourcePaths& paths) {
  return ResourceTexts{read_file(paths.grammar, "grammar"), read_file(paths.lexicon, "lexicon"),
                       read_file(paths.taxonomy, "taxonomy"), read_file(paths.xforms, "xforms"),
                       read_file(paths.config, "config")};
}

void ResourceBundle::validate() const {
  std::set<std::string, std::less<>> producible;
  for (const auto& r : grammar_) producible.insert(r.lhs);
  for (const auto& [_, senses] : lexicon_) {
    for (const auto& s : senses) producible.insert(s.pos);
  }
  if (config_.unknown_word_policy == UnknownWordPolicy::noun_fallback) producible.insert("n");
  for (const auto& r : grammar_) {
    for (const auto& c : r.rhs) {
      if (!producible.count(c)) {
        throw ResourceError("grammar", 0,
                            "rule " + r.id + ": category " + c + " is neither a rule lhs nor a lexical pos");
      }
    }
  }
  std::string where;
  if (has_unary_cycle(grammar_, where)) {
    throw ResourceError("grammar", 0, "unary rule cycle through category " + where);
  }
}

const std::vector<LexSense>* ResourceBundle::senses(std::string_view surface) const {
  auto it = lexicon_.find(surface);
  return it == lexicon_.end() ? nullptr : &it->second;
}

std::size_t ResourceBundle::sense_count() const {
  std::size_t n = 0;
  for (const auto& [_, senses] : lexicon_) n += senses.size();
  return n;
}

std::optional<std::size_t> ResourceBundle::rule_index(std::string_view id) const {
  auto it = rule_ids_.find(id);
  if (it == rule_ids_.end()) return std::nullopt;
  return it->second;
}

ResourceTexts ResourceBundle::to_texts() const {
  return ResourceTexts{format_grammar(grammar_), format_lexicon(lexicon_), format_taxonomy(taxonomy_),
                       format_xforms(xforms_), format_config(config_)};
}

bool ResourceBundle::same_content(const ResourceBundle& other) const {
  return grammar_ == other.grammar_ && lexicon_ == other.lexicon_ && taxonomy_ == other.taxonomy_ &&
         xforms_ == other.xforms_ && config_ == other.config_;
}

}  // namespace ejmt
