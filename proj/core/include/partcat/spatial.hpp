#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "partcat/operations.hpp"
#include "partcat/partition.hpp"

namespace partcat {

/// Product-set view of a spatial partition: `points[i][j]` is the block label
/// of point i (upper points first, then lower points) on level j.
struct SpatialDiagram {
  std::size_t upper_count = 0;
  std::size_t lower_count = 0;
  std::size_t levels = 1;
  std::vector<std::vector<Label>> points;
};

/// Partition on `levels` stacked copies of each point, stored flattened:
/// point (i, j) sits at flattened position levels * i + j (0-based), so the
/// flattened partition has levels * k upper and levels * l lower points.
class SpatialPartition {
 public:
  SpatialPartition() = default;
  /// Throws std::invalid_argument for levels == 0 and DivisibilityError when
  /// a row length of `flattened` is not a multiple of `levels`.
  SpatialPartition(std::size_t levels, Partition flattened);

  std::size_t levels() const noexcept { return levels_; }
  const Partition& flattened() const noexcept { return flattened_; }

  /// Counts in points per level (k and l), not flattened points.
  std::size_t upper_count() const noexcept { return flattened_.upper_count() / levels_; }
  std::size_t lower_count() const noexcept { return flattened_.lower_count() / levels_; }
  std::size_t size() const noexcept { return upper_count() + lower_count(); }

  friend bool operator==(const SpatialPartition&, const SpatialPartition&) = default;
  friend std::strong_ordering operator<=>(const SpatialPartition& a, const SpatialPartition& b);

 private:
  std::size_t levels_ = 1;
  Partition flattened_;
};

/// Reindexes the product set {points} x {levels} onto a flat partition.
/// Throws std::invalid_argument on a malformed diagram.
Partition flatten(const SpatialDiagram& diagram);
SpatialPartition to_spatial(const SpatialDiagram& diagram);

/// Inverse of `flatten`, with canonical labels.
SpatialDiagram unflatten(const SpatialPartition& p);
SpatialDiagram unflatten(std::size_t levels, const Partition& flattened);

/// Throw LevelMismatchError when the level counts differ.
SpatialPartition spatial_tensor(const SpatialPartition& p, const SpatialPartition& q);
SpatialPartition spatial_compose(const SpatialPartition& p, const SpatialPartition& q);
SpatialPartition spatial_involution(const SpatialPartition& p);

/// Moves a whole column (all levels of one point) between rows.
SpatialPartition spatial_rotate(const SpatialPartition& p, Corner corner);
/// Reverses the order of columns in both rows; levels keep their order.
SpatialPartition spatial_reflect_vertical(const SpatialPartition& p);

/// Independent copy of `p` on each of `levels` levels. Throws
/// std::invalid_argument for levels == 0.
SpatialPartition lift_to_levels(const Partition& p, std::size_t levels);

/// Lifted identity and lifted pair.
std::vector<SpatialPartition> spatial_base_partitions(std::size_t levels);

}  // namespace partcat

template <>
struct std::hash<partcat::SpatialPartition> {
  std::size_t operator()(const partcat::SpatialPartition& p) const noexcept;
};
