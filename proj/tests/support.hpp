#pragma once

// Test-side helpers. The brute-force enumerator below works straight off the
// grammar and lexicon, it never looks at the chart.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ejmt/forest.hpp"
#include "ejmt/preparser.hpp"
#include "ejmt/resources.hpp"

namespace testsupport {

inline std::string fixture(const std::string& name) { return std::string(EJMT_FIXTURES) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ejmt::ResourcePaths paths(const std::string& config = "c0.config") {
  return {fixture("g0.grammar"), fixture("l0.lexicon"), fixture("t0.taxonomy"), fixture("x0.xforms"),
          fixture(config)};
}

inline ejmt::ResourceTexts texts(const std::string& config = "c0.config") {
  return ejmt::read_resource_files(paths(config));
}

inline std::shared_ptr<const ejmt::ResourceBundle> bundle(const std::string& config = "c0.config") {
  return ejmt::ResourceBundle::load_files(paths(config));
}

template <class F>
std::shared_ptr<const ejmt::ResourceBundle> tweaked(F&& edit) {
  auto b = bundle();
  auto cfg = b->config();
  edit(cfg);
  return b->with_config(cfg);
}

inline std::shared_ptr<const ejmt::ResourceBundle> with_xforms(const std::string& xforms) {
  auto t = texts();
  t.xforms = xforms;
  return ejmt::ResourceBundle::load(t);
}

inline ejmt::Forest parse(const std::string& sentence, const std::shared_ptr<const ejmt::ResourceBundle>& b) {
  return ejmt::parse_to_forest(ejmt::tokenize(sentence), b);
}

// "the man watched the dog" followed by n PPs cycling through fixed nouns.
inline std::string pp_family(std::size_t n) {
  static const char* preps[] = {"in", "near", "on", "by", "at", "with"};
  static const char* nouns[] = {"park", "house", "hill", "river", "station", "telescope"};
  std::string s = "the man watched the dog";
  for (std::size_t i = 0; i < n; ++i) s += std::string(" ") + preps[i % 6] + " the " + nouns[i % 6];
  return s;
}

// Every derivation signature of `cat` over tokens [i, j), by trying every
// rule and every split. Exponential, fine for short fixture sentences.
class BruteForce {
 public:
  BruteForce(const ejmt::ResourceBundle& b, std::vector<std::string> words) : b_(b), words_(std::move(words)) {}

  std::vector<std::string> derive(const std::string& cat, std::size_t i, std::size_t j) {
    auto key = std::make_tuple(cat, i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<std::string> out;
    if (j == i + 1) {
      if (const auto* senses = b_.senses(words_[i])) {
        for (const auto& s : *senses) {
          if (s.pos == cat) out.push_back(s.surface + ":" + s.sense_id);
        }
      }
    }
    for (const auto& rule : b_.grammar()) {
      if (rule.lhs != cat) continue;
      splits(rule, 0, i, j, rule.id, out);
    }
    memo_[key] = out;
    return out;
  }

  std::vector<std::string> all() { return derive("s", 0, words_.size()); }

 private:
  void splits(const ejmt::GrammarRule& rule, std::size_t k, std::size_t from, std::size_t to,
              const std::string& prefix, std::vector<std::string>& out) {
    const auto remaining = rule.rhs.size() - k;
    if (remaining == 0) {
      if (from == to) out.push_back(prefix);
      return;
    }
    if (to - from < remaining) return;
    const std::size_t last = remaining == 1 ? to : to - (remaining - 1);
    for (std::size_t mid = remaining == 1 ? to : from + 1; mid <= last; ++mid) {
      for (const auto& sub : derive(rule.rhs[k], from, mid)) splits(rule, k + 1, mid, to, prefix + " " + sub, out);
    }
  }

  const ejmt::ResourceBundle& b_;
  std::vector<std::string> words_;
  std::map<std::tuple<std::string, std::size_t, std::size_t>, std::vector<std::string>> memo_;
};

inline std::vector<std::string> norms(const std::string& sentence) {
  std::vector<std::string> out;
  for (const auto& t : ejmt::tokenize(sentence)) out.push_back(t.norm);
  return out;
}

}  // namespace testsupport
