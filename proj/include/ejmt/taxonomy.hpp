#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ejmt {

class TaxonomyError : public std::invalid_argument {
 public:
  TaxonomyError(std::size_t entry, const std::string& what)
      : std::invalid_argument(what), entry_(entry) {}
  /// Index into the entry list handed to Taxonomy::build.
  std::size_t entry() const { return entry_; }

 private:
  std::size_t entry_;
};

/// Single-rooted semantic type tree. Node ids are dense indices in
/// declaration order.
class Taxonomy {
 public:
  struct Node {
    std::string name;
    std::optional<std::size_t> parent;
    std::size_t depth = 0;
    bool operator==(const Node&) const = default;
  };

  Taxonomy() = default;

  struct Entry {
    std::string name;
    std::optional<std::string> parent;
  };
  /// Throws TaxonomyError on cycles, orphans, duplicates, or a root count
  /// other than one.
  static Taxonomy build(const std::vector<Entry>& entries);

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t id) const { return nodes_.at(id); }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t root() const { return root_; }
  const std::string& root_name() const { return nodes_.at(root_).name; }

  std::optional<std::size_t> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  /// Throws std::out_of_range for unknown names.
  std::size_t id(std::string_view name) const;

  bool is_a(std::size_t a, std::size_t b) const;
  bool is_a(std::string_view a, std::string_view b) const;

  std::size_t lca(std::size_t a, std::size_t b) const;

  /// depth(lca) / max(depth(a), depth(b)); 1 when a == b.
  double sim(std::size_t a, std::size_t b) const;
  double sim(std::string_view a, std::string_view b) const;

  bool operator==(const Taxonomy& other) const { return nodes_ == other.nodes_; }

 private:
  std::vector<Node> nodes_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::size_t root_ = 0;
};

}  // namespace ejmt
