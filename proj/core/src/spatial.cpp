#include "partcat/spatial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "partcat/errors.hpp"

namespace partcat {
namespace {

void check_levels(const SpatialPartition& p, const SpatialPartition& q) {
  if (p.levels() != q.levels()) {
    throw LevelMismatchError("level mismatch: " + std::to_string(p.levels()) + " levels vs " +
                             std::to_string(q.levels()) + " levels");
  }
}

// Columns of a flattened row, each holding `levels` consecutive labels.
std::vector<std::vector<Label>> columns(std::span<const Label> row, std::size_t levels) {
  std::vector<std::vector<Label>> out;
  out.reserve(row.size() / levels);
  for (std::size_t i = 0; i < row.size(); i += levels) {
    out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(i),
                     row.begin() + static_cast<std::ptrdiff_t>(i + levels));
  }
  return out;
}

std::vector<Label> join(const std::vector<std::vector<Label>>& cols) {
  std::vector<Label> out;
  for (const auto& c : cols) out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace

SpatialPartition::SpatialPartition(std::size_t levels, Partition flattened)
    : levels_(levels), flattened_(std::move(flattened)) {
  if (levels_ == 0) throw std::invalid_argument("spatial partition needs at least one level");
  if (flattened_.upper_count() % levels_ != 0 || flattened_.lower_count() % levels_ != 0) {
    throw DivisibilityError("rows of " + std::to_string(flattened_.upper_count()) + " and " +
                            std::to_string(flattened_.lower_count()) +
                            " points are not divisible by " + std::to_string(levels_) +
                            " levels");
  }
}

std::strong_ordering operator<=>(const SpatialPartition& a, const SpatialPartition& b) {
  if (auto c = a.levels_ <=> b.levels_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.flattened_ <=> b.flattened_;
}

Partition flatten(const SpatialDiagram& d) {
  if (d.levels == 0) throw std::invalid_argument("spatial diagram needs at least one level");
  if (d.points.size() != d.upper_count + d.lower_count) {
    throw std::invalid_argument("spatial diagram point count does not match its rows");
  }
  std::vector<Label> blocks(d.levels * d.points.size());
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    if (d.points[i].size() != d.levels) {
      throw std::invalid_argument("spatial diagram point " + std::to_string(i + 1) + " has " +
                                  std::to_string(d.points[i].size()) + " levels, expected " +
                                  std::to_string(d.levels));
    }
    for (std::size_t j = 0; j < d.levels; ++j) blocks[d.levels * i + j] = d.points[i][j];
  }
  return Partition(d.levels * d.upper_count, d.levels * d.lower_count, std::move(blocks));
}

SpatialPartition to_spatial(const SpatialDiagram& d) { return {d.levels, flatten(d)}; }

SpatialDiagram unflatten(const SpatialPartition& p) {
  const std::size_t m = p.levels();
  const auto blocks = p.flattened().blocks();
  SpatialDiagram d{p.upper_count(), p.lower_count(), m, {}};
  d.points.resize(p.size(), std::vector<Label>(m));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) d.points[i][j] = blocks[m * i + j];
  }
  return d;
}

SpatialDiagram unflatten(std::size_t levels, const Partition& flattened) {
  return unflatten(SpatialPartition(levels, flattened));
}

SpatialPartition spatial_tensor(const SpatialPartition& p, const SpatialPartition& q) {
  check_levels(p, q);
  return {p.levels(), tensor(p.flattened(), q.flattened())};
}

SpatialPartition spatial_compose(const SpatialPartition& p, const SpatialPartition& q) {
  check_levels(p, q);
  if (q.lower_count() != p.upper_count()) {
    throw SizeMismatchError("size mismatch: cannot compose, lower row of the top partition has " +
                            std::to_string(q.lower_count()) +
                            " points but upper row of the bottom partition has " +
                            std::to_string(p.upper_count()));
  }
  return {p.levels(), compose(p.flattened(), q.flattened())};
}

SpatialPartition spatial_involution(const SpatialPartition& p) {
  return {p.levels(), involution(p.flattened())};
}

SpatialPartition spatial_rotate(const SpatialPartition& p, Corner corner) {
  const std::size_t m = p.levels();
  auto upper = columns(p.flattened().upper(), m);
  auto lower = columns(p.flattened().lower(), m);
  const bool from_upper = corner == Corner::top_left || corner == Corner::top_right;
  if ((from_upper ? upper : lower).empty()) {
    throw EmptyRowError(std::string("empty row: rotation ") + std::string(to_string(corner)) +
                        " needs a point in the " + (from_upper ? "upper" : "lower") + " row");
  }
  switch (corner) {
    case Corner::top_left:
      lower.insert(lower.begin(), std::move(upper.front()));
      upper.erase(upper.begin());
      break;
    case Corner::top_right:
      lower.push_back(std::move(upper.back()));
      upper.pop_back();
      break;
    case Corner::bottom_left:
      upper.insert(upper.begin(), std::move(lower.front()));
      lower.erase(lower.begin());
      break;
    case Corner::bottom_right:
      upper.push_back(std::move(lower.back()));
      lower.pop_back();
      break;
  }
  return {m, Partition(join(upper), join(lower))};
}

SpatialPartition spatial_reflect_vertical(const SpatialPartition& p) {
  const std::size_t m = p.levels();
  auto upper = columns(p.flattened().upper(), m);
  auto lower = columns(p.flattened().lower(), m);
  std::reverse(upper.begin(), upper.end());
  std::reverse(lower.begin(), lower.end());
  return {m, Partition(join(upper), join(lower))};
}

SpatialPartition lift_to_levels(const Partition& p, std::size_t levels) {
  if (levels == 0) throw std::invalid_argument("lift needs at least one level");
  const Label stride = static_cast<Label>(p.block_count());
  std::vector<Label> blocks(levels * p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < levels; ++j) {
      blocks[levels * i + j] = p.blocks()[i] + stride * static_cast<Label>(j);
    }
  }
  return {levels, Partition(levels * p.upper_count(), levels * p.lower_count(), std::move(blocks))};
}

std::vector<SpatialPartition> spatial_base_partitions(std::size_t levels) {
  return {lift_to_levels(identity_partition(), levels), lift_to_levels(pair_partition(), levels)};
}

}  // namespace partcat

std::size_t std::hash<partcat::SpatialPartition>::operator()(
    const partcat::SpatialPartition& p) const noexcept {
  return std::hash<partcat::Partition>{}(p.flattened()) * 31 + p.levels();
}
