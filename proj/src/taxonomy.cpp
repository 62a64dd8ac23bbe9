#include "ejmt/taxonomy.hpp"

#include <algorithm>
#include <stdexcept>

namespace ejmt {

Taxonomy Taxonomy::build(const std::vector<Entry>& entries) {
  Taxonomy t;
  t.nodes_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!t.index_.emplace(e.name, i).second) {
      throw TaxonomyError(i, "duplicate sem node " + e.name);
    }
    t.nodes_.push_back(Node{e.name, std::nullopt, 0});
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].parent) continue;
    auto it = t.index_.find(*entries[i].parent);
    if (it == t.index_.end()) {
      throw TaxonomyError(i, "orphan parent " + *entries[i].parent + " for sem " + entries[i].name);
    }
    t.nodes_[i].parent = it->second;
  }

  // Walk each node up to a root; revisiting a node on the same walk is a cycle.
  std::vector<int> state(t.nodes_.size(), 0);  // 0 new, 1 on path, 2 done
  for (std::size_t start = 0; start < t.nodes_.size(); ++start) {
    std::vector<std::size_t> path;
    std::size_t cur = start;
    while (true) {
      if (state[cur] == 2) break;
      if (state[cur] == 1) {
        throw TaxonomyError(cur, "cycle through sem " + t.nodes_[cur].name);
      }
      state[cur] = 1;
      path.push_back(cur);
      if (!t.nodes_[cur].parent) break;
      cur = *t.nodes_[cur].parent;
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      auto& n = t.nodes_[*it];
      n.depth = n.parent ? t.nodes_[*n.parent].depth + 1 : 0;
      state[*it] = 2;
    }
  }

  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < t.nodes_.size(); ++i) {
    if (t.nodes_[i].parent) continue;
    if (root) throw TaxonomyError(i, "two roots: " + t.nodes_[*root].name + " and " + t.nodes_[i].name);
    root = i;
  }
  if (!root) throw TaxonomyError(0, "taxonomy has no root");
  t.root_ = *root;
  return t;
}

std::optional<std::size_t> Taxonomy::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Taxonomy::id(std::string_view name) const {
  auto found = find(name);
  if (!found) throw std::out_of_range("unknown sem node " + std::string(name));
  return *found;
}

bool Taxonomy::is_a(std::size_t a, std::size_t b) const {
  std::optional<std::size_t> cur = a;
  while (cur) {
    if (*cur == b) return true;
    cur = nodes_.at(*cur).parent;
  }
  return false;
}

bool Taxonomy::is_a(std::string_view a, std::string_view b) const {
  return is_a(id(a), id(b));
}

std::size_t Taxonomy::lca(std::size_t a, std::size_t b) const {
  while (nodes_.at(a).depth > nodes_.at(b).depth) a = *nodes_[a].parent;
  while (nodes_.at(b).depth > nodes_.at(a).depth) b = *nodes_[b].parent;
  while (a != b) {
    a = *nodes_[a].parent;
    b = *nodes_[b].parent;
  }
  return a;
}

double Taxonomy::sim(std::size_t a, std::size_t b) const {
  if (a == b) return 1.0;
  const auto deepest = std::max(nodes_.at(a).depth, nodes_.at(b).depth);
  return static_cast<double>(nodes_[lca(a, b)].depth) / static_cast<double>(deepest);
}

double Taxonomy::sim(std::string_view a, std::string_view b) const {
  return sim(id(a), id(b));
}

}  // namespace ejmt
