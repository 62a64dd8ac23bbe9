#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string_view>
#include <tuple>

#include "ejmt/forest.hpp"

namespace ejmt {
namespace {

using Cell = std::map<std::string, std::size_t, std::less<>>;

/// Mutable chart used while parsing; compacted into a Forest at the end.
class Chart {
 public:
  explicit Chart(std::size_t n) : cells_(n * (n + 1)), n_(n) {}

  Cell& cell(std::size_t i, std::size_t j) { return cells_[i * (n_ + 1) + j]; }

  std::optional<std::size_t> find(std::size_t i, std::size_t j, std::string_view cat) {
    auto& c = cell(i, j);
    auto it = c.find(cat);
    if (it == c.end()) return std::nullopt;
    return it->second;
  }

  std::size_t node_for(const std::string& cat, std::size_t i, std::size_t j) {
    auto& c = cell(i, j);
    auto [it, inserted] = c.emplace(cat, nodes.size());
    if (inserted) nodes.push_back(ForestNode{cat, {i, j}, {}});
    return it->second;
  }

  std::vector<ForestNode> nodes;

 private:
  std::vector<Cell> cells_;
  std::size_t n_;
};

void add_nary(Chart& chart, const GrammarRule& rule, std::size_t rule_index, std::size_t i, std::size_t j,
              std::vector<std::size_t>& found, std::size_t pos, std::size_t m) {
  const std::size_t k = rule.rhs.size();
  if (m == k) {
    if (pos == j) {
      auto id = chart.node_for(rule.lhs, i, j);
      chart.nodes[id].alternatives.push_back(RuleDerivation{rule_index, found});
    }
    return;
  }
  const std::size_t remaining = k - m;
  if (j < pos + remaining) return;
  for (std::size_t end = pos + 1; end + (remaining - 1) <= j; ++end) {
    auto child = chart.find(pos, end, rule.rhs[m]);
    if (!child) continue;
    found.push_back(*child);
    add_nary(chart, rule, rule_index, i, j, found, end, m + 1);
    found.pop_back();
  }
}

std::shared_ptr<const LexSense> fallback_sense(const Token& token, const ResourceBundle& bundle) {
  auto sense = std::make_shared<LexSense>();
  sense->surface = token.norm;
  sense->pos = "n";
  sense->sense_id = "unk";
  sense->sem = bundle.taxonomy().root_name();
  sense->ja = token.surface;
  sense->weight = 0.1;
  return sense;
}

void post_order(const std::vector<ForestNode>& nodes, std::size_t id, std::vector<char>& seen,
                std::vector<std::size_t>& order) {
  if (seen[id]) return;
  seen[id] = 1;
  for (const auto& alt : nodes[id].alternatives) {
    if (const auto* r = std::get_if<RuleDerivation>(&alt)) {
      for (auto c : r->children) post_order(nodes, c, seen, order);
    }
  }
  order.push_back(id);
}

}  // namespace

Forest parse_to_forest(std::vector<Token> tokens, std::shared_ptr<const ResourceBundle> bundle) {
  const auto& b = *bundle;
  const std::size_t n = tokens.size();
  Forest forest;
  forest.bundle_ = bundle;

  Chart chart(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto* senses = b.senses(tokens[i].norm);
    std::map<std::string, LexicalDerivation> by_pos;
    if (senses) {
      for (const auto& s : *senses) {
        // Aliasing constructor: each sense keeps the bundle alive.
        by_pos[s.pos].senses.emplace_back(bundle, &s);
      }
    } else if (b.config().unknown_word_policy == UnknownWordPolicy::reject) {
      throw UnknownTokenError(tokens[i].surface, i);
    } else {
      by_pos["n"].senses.push_back(fallback_sense(tokens[i], b));
    }
    for (auto& [pos, lex] : by_pos) {
      auto id = chart.node_for(pos, i, i + 1);
      chart.nodes[id].alternatives.emplace_back(std::move(lex));
    }
  }

  std::vector<std::size_t> unary;
  std::vector<std::size_t> nary;
  for (std::size_t r = 0; r < b.grammar().size(); ++r) {
    (b.grammar()[r].rhs.size() == 1 ? unary : nary).push_back(r);
  }

  std::vector<std::size_t> found;
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len;
      if (len >= 2) {
        for (auto r : nary) add_nary(chart, b.grammar()[r], r, i, j, found, i, 0);
      }
      // Unary closure; the grammar has no unary cycles so this terminates.
      std::set<std::pair<std::size_t, std::size_t>> applied;
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto r : unary) {
          const auto& rule = b.grammar()[r];
          auto child = chart.find(i, j, rule.rhs[0]);
          if (!child || !applied.emplace(r, *child).second) continue;
          auto id = chart.node_for(rule.lhs, i, j);
          chart.nodes[id].alternatives.push_back(RuleDerivation{r, {*child}});
          changed = true;
        }
      }
    }
  }

  for (const auto& node : chart.nodes) {
    if (!forest.longest_span_ || node.span.length() > forest.longest_span_->length() ||
        (node.span.length() == forest.longest_span_->length() && node.span.begin < forest.longest_span_->begin)) {
      forest.longest_span_ = node.span;
    }
  }

  std::vector<std::size_t> order;
  std::vector<char> seen(chart.nodes.size(), 0);
  auto root = n > 0 ? chart.find(0, n, kStartSymbol) : std::nullopt;
  if (root) {
    post_order(chart.nodes, *root, seen, order);
  } else {
    for (std::size_t id = 0; id < chart.nodes.size(); ++id) post_order(chart.nodes, id, seen, order);
  }

  std::vector<std::size_t> remap(chart.nodes.size(), kUnlimited);
  for (std::size_t k = 0; k < order.size(); ++k) remap[order[k]] = k;
  forest.nodes_.reserve(order.size());
  for (auto old : order) {
    ForestNode node = std::move(chart.nodes[old]);
    for (auto& alt : node.alternatives) {
      if (auto* r = std::get_if<RuleDerivation>(&alt)) {
        for (auto& c : r->children) c = remap[c];
      }
    }
    forest.nodes_.push_back(std::move(node));
  }
  if (root) forest.root_ = remap[*root];
  forest.tokens_ = std::move(tokens);
  return forest;
}

BigCount count_parses(const Forest& forest) {
  if (!forest.root()) return 0;
  std::vector<BigCount> counts(forest.nodes().size());
  for (std::size_t id = 0; id < forest.nodes().size(); ++id) {
    BigCount total = 0;
    for (const auto& alt : forest.node(id).alternatives) {
      if (const auto* lex = std::get_if<LexicalDerivation>(&alt)) {
        total += lex->senses.size();
      } else {
        BigCount product = 1;
        for (auto c : std::get<RuleDerivation>(alt).children) product *= counts[c];
        total += product;
      }
    }
    counts[id] = std::move(total);
  }
  return counts[*forest.root()];
}

std::optional<double> log10_count(const BigCount& count) {
  if (count <= 0) return std::nullopt;
  const std::string digits = count.str();
  const std::size_t lead = std::min<std::size_t>(digits.size(), 17);
  const double mantissa = std::stod(digits.substr(0, lead));
  return std::log10(mantissa) + static_cast<double>(digits.size() - lead);
}

namespace {

struct Ranked {
  std::string signature;
  Tree tree;
};

void truncate_sorted(std::vector<Ranked>& v, std::size_t limit) {
  std::sort(v.begin(), v.end(), [](const Ranked& a, const Ranked& b) { return a.signature < b.signature; });
  if (v.size() > limit) v.resize(limit);
}

/// Lexicographic product of the children's sorted lists; stops after
/// `limit` combinations since later ones can never enter the top `limit`.
void product(const Forest& forest, const RuleDerivation& alt, const std::vector<std::vector<Ranked>>& best,
             std::size_t limit, std::size_t m, std::vector<const Ranked*>& picked, std::vector<Ranked>& out,
             std::size_t& emitted) {
  if (emitted >= limit) return;
  if (m == alt.children.size()) {
    const auto& rule = forest.bundle().grammar()[alt.rule];
    Ranked r;
    r.signature = rule.id;
    std::vector<Tree> children;
    for (const auto* p : picked) {
      r.signature += ' ';
      r.signature += p->signature;
      children.push_back(p->tree);
    }
    r.tree = make_internal(rule, alt.rule, std::move(children));
    out.push_back(std::move(r));
    ++emitted;
    return;
  }
  for (const auto& child : best[alt.children[m]]) {
    picked.push_back(&child);
    product(forest, alt, best, limit, m + 1, picked, out, emitted);
    picked.pop_back();
    if (emitted >= limit) return;
  }
}

}  // namespace

std::vector<Tree> enumerate_trees(const Forest& forest, std::size_t limit) {
  if (!forest.root() || limit == 0) return {};
  std::vector<std::vector<Ranked>> best(forest.nodes().size());
  for (std::size_t id = 0; id <= *forest.root(); ++id) {
    const auto& node = forest.node(id);
    std::vector<Ranked> candidates;
    for (const auto& alt : node.alternatives) {
      if (const auto* lex = std::get_if<LexicalDerivation>(&alt)) {
        for (const auto& s : lex->senses) {
          candidates.push_back({leaf_signature(*s), make_leaf(node.category, node.span.begin, s)});
        }
      } else {
        std::vector<const Ranked*> picked;
        std::vector<Ranked> local;
        std::size_t emitted = 0;
        product(forest, std::get<RuleDerivation>(alt), best, limit, 0, picked, local, emitted);
        for (auto& r : local) candidates.push_back(std::move(r));
      }
    }
    truncate_sorted(candidates, limit);
    best[id] = std::move(candidates);
  }
  std::vector<Tree> out;
  for (auto& r : best[*forest.root()]) out.push_back(std::move(r.tree));
  return out;
}

std::string serialize_forest(const Forest& forest) {
  const auto& nodes = forest.nodes();
  std::vector<std::size_t> ids(nodes.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = nodes[a];
    const auto& y = nodes[b];
    return std::tuple(x.span.begin, y.span.end, x.category) < std::tuple(y.span.begin, x.span.end, y.category);
  });
  auto ref = [&](std::size_t id) {
    const auto& n = nodes[id];
    return "<" + n.category + " " + std::to_string(n.span.begin) + " " + std::to_string(n.span.end) + ">";
  };
  std::string out;
  for (auto id : ids) {
    const auto& n = nodes[id];
    std::vector<std::string> alts;
    for (const auto& alt : n.alternatives) {
      std::string a = "(";
      if (const auto* lex = std::get_if<LexicalDerivation>(&alt)) {
        a += "lex";
        std::vector<std::string> sigs;
        for (const auto& s : lex->senses) sigs.push_back(leaf_signature(*s));
        std::sort(sigs.begin(), sigs.end());
        for (const auto& s : sigs) a += " " + s;
      } else {
        const auto& r = std::get<RuleDerivation>(alt);
        a += forest.bundle().grammar()[r.rule].id;
        for (auto c : r.children) a += " " + ref(c);
      }
      alts.push_back(a + ")");
    }
    std::sort(alts.begin(), alts.end());
    out += "[" + n.category + " " + std::to_string(n.span.begin) + " " + std::to_string(n.span.end) + " ";
    for (const auto& a : alts) out += a;
    out += "]\n";
  }
  return out;
}

}  // namespace ejmt
