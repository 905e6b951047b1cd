#include "partcat/operations.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "partcat/errors.hpp"
#include "partcat/union_find.hpp"

namespace partcat {
namespace {

void check_composable(const Partition& p, const Partition& q) {
  if (q.lower_count() != p.upper_count()) {
    throw SizeMismatchError("size mismatch: cannot compose, lower row of the top partition has " +
                            std::to_string(q.lower_count()) +
                            " points but upper row of the bottom partition has " +
                            std::to_string(p.upper_count()));
  }
}

}  // namespace

Corner inverse(Corner c) noexcept {
  switch (c) {
    case Corner::top_left: return Corner::bottom_left;
    case Corner::top_right: return Corner::bottom_right;
    case Corner::bottom_left: return Corner::top_left;
    case Corner::bottom_right: return Corner::top_right;
  }
  return c;
}

std::string_view to_string(Corner c) noexcept {
  switch (c) {
    case Corner::top_left: return "tl";
    case Corner::top_right: return "tr";
    case Corner::bottom_left: return "bl";
    case Corner::bottom_right: return "br";
  }
  return "?";
}

Partition involution(const Partition& p) {
  std::vector<Label> blocks;
  blocks.reserve(p.size());
  blocks.insert(blocks.end(), p.lower().begin(), p.lower().end());
  blocks.insert(blocks.end(), p.upper().begin(), p.upper().end());
  return Partition(p.lower_count(), p.upper_count(), std::move(blocks));
}

Partition tensor(const Partition& p, const Partition& q) {
  const LabeledPartition shifted = make_disjoint(q, p);
  const std::span<const Label> q_blocks(shifted.blocks);
  std::vector<Label> blocks;
  blocks.reserve(p.size() + q.size());
  blocks.insert(blocks.end(), p.upper().begin(), p.upper().end());
  blocks.insert(blocks.end(), q_blocks.begin(), q_blocks.begin() + q.upper_count());
  blocks.insert(blocks.end(), p.lower().begin(), p.lower().end());
  blocks.insert(blocks.end(), q_blocks.begin() + q.upper_count(), q_blocks.end());
  return Partition(p.upper_count() + q.upper_count(), p.lower_count() + q.lower_count(),
                   std::move(blocks));
}

Partition compose(const Partition& p, const Partition& q) {
  check_composable(p, q);
  // q keeps its canonical labels 1..B(q); p is read shifted above them, the
  // same shift make_disjoint applies, without copying p.
  const Label shift = static_cast<Label>(q.block_count()) + 1;
  const std::span<const Label> bottom = p.blocks();
  const std::span<const Label> top = q.blocks();
  const std::size_t k = q.upper_count();
  const std::size_t middle = p.upper_count();

  UnionFind forest(q.block_count() + p.block_count() + 2);
  for (std::size_t i = 0; i < middle; ++i) forest.unite(bottom[i] + shift, top[k + i]);

  std::vector<Label> blocks;
  blocks.reserve(k + p.lower_count());
  for (std::size_t i = 0; i < k; ++i) blocks.push_back(forest.find(top[i]));
  for (std::size_t i = middle; i < bottom.size(); ++i) {
    blocks.push_back(forest.find(bottom[i] + shift));
  }
  return Partition(k, p.lower_count(), std::move(blocks));
}

Partition compose_via_dfs(const Partition& p, const Partition& q) {
  check_composable(p, q);
  const LabeledPartition bottom = make_disjoint(p, q);
  const std::span<const Label> top = q.blocks();
  const std::size_t k = q.upper_count();
  const std::size_t middle = p.upper_count();

  std::vector<Label> vertices;
  vertices.reserve(p.size() + q.size());
  vertices.insert(vertices.end(), top.begin(), top.end());
  vertices.insert(vertices.end(), bottom.blocks.begin(), bottom.blocks.end());
  std::vector<std::pair<Label, Label>> edges;
  edges.reserve(middle);
  for (std::size_t i = 0; i < middle; ++i) edges.emplace_back(bottom.blocks[i], top[k + i]);

  const auto representative = components_by_dfs(vertices, edges);
  std::vector<Label> blocks;
  blocks.reserve(k + p.lower_count());
  for (std::size_t i = 0; i < k; ++i) blocks.push_back(representative.at(top[i]));
  for (std::size_t i = middle; i < bottom.blocks.size(); ++i) {
    blocks.push_back(representative.at(bottom.blocks[i]));
  }
  return Partition(k, p.lower_count(), std::move(blocks));
}

Partition rotate(const Partition& p, Corner corner) {
  std::vector<Label> upper(p.upper().begin(), p.upper().end());
  std::vector<Label> lower(p.lower().begin(), p.lower().end());
  const bool from_upper = corner == Corner::top_left || corner == Corner::top_right;
  if ((from_upper ? upper : lower).empty()) {
    throw EmptyRowError(std::string("empty row: rotation ") + std::string(to_string(corner)) +
                        " needs a point in the " + (from_upper ? "upper" : "lower") + " row");
  }
  switch (corner) {
    case Corner::top_left:
      lower.insert(lower.begin(), upper.front());
      upper.erase(upper.begin());
      break;
    case Corner::top_right:
      lower.push_back(upper.back());
      upper.pop_back();
      break;
    case Corner::bottom_left:
      upper.insert(upper.begin(), lower.front());
      lower.erase(lower.begin());
      break;
    case Corner::bottom_right:
      upper.push_back(lower.back());
      lower.pop_back();
      break;
  }
  return Partition(upper, lower);
}

Partition reflect_vertical(const Partition& p) {
  std::vector<Label> blocks;
  blocks.reserve(p.size());
  blocks.insert(blocks.end(), p.upper().rbegin(), p.upper().rend());
  blocks.insert(blocks.end(), p.lower().rbegin(), p.lower().rend());
  return Partition(p.upper_count(), p.lower_count(), std::move(blocks));
}

}  // namespace partcat
