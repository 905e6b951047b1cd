#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "partcat/partition.hpp"

namespace partcat {

/// Disjoint-set forest over non-negative integer labels with path compression
/// and union by rank.
///
/// Labels are created lazily: a label that has never been touched is its own
/// singleton class. Storage is a vector indexed by label, so memory grows with
/// the largest label touched; callers work with shifted canonical labels,
/// which stay within a small multiple of the partition size.
///
/// `find` mutates internal state (path compression); an instance must not be
/// shared across threads without external synchronization.
class UnionFind {
 public:
  UnionFind() = default;
  explicit UnionFind(std::size_t capacity_hint) { reserve(capacity_hint); }

  void reserve(std::size_t labels) {
    parent_.reserve(labels);
    rank_.reserve(labels);
  }

  Label find(Label i);
  void unite(Label i, Label j);
  bool connected(Label i, Label j) { return find(i) == find(j); }

  /// Number of labels materialized so far (largest touched label + 1).
  std::size_t extent() const noexcept { return parent_.size(); }

 private:
  void touch(Label i);

  std::vector<Label> parent_;
  std::vector<std::uint8_t> rank_;
};

/// Connected components of an undirected graph by iterative depth-first
/// search in O(|V| + |E|). Every vertex maps to one representative vertex of
/// its component. Edge endpoints missing from `vertices` are added.
std::unordered_map<Label, Label> components_by_dfs(std::span<const Label> vertices,
                                                   std::span<const std::pair<Label, Label>> edges);

}  // namespace partcat
