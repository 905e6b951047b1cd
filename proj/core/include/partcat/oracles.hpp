#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "partcat/partition.hpp"

namespace partcat::oracle {

/// Largest k + l accepted by the enumerators.
inline constexpr std::size_t kMaxEnumerationSize = 10;

/// Every partition with k upper and l lower points, generated as restricted
/// growth strings (already canonical). Throws BoundExceededError when
/// k + l > kMaxEnumerationSize.
std::vector<Partition> enumerate_all(std::size_t k, std::size_t l);

/// Every block has exactly two points.
bool is_pair_partition(const Partition& p);

/// No crossing in boundary order: upper points left to right, then lower
/// points right to left. Brute force over all position quadruples.
bool is_noncrossing(const Partition& p);

struct ReferenceCounts {
  std::uint64_t all = 0;
  std::uint64_t noncrossing = 0;
  std::uint64_t pair = 0;
};

/// Counts over all (k, l) splits of `size`, obtained by filtering
/// enumerate_all. Throws BoundExceededError like enumerate_all.
ReferenceCounts reference_counts(std::size_t size);

/// p·q (q on top) by explicit point graph and Warshall transitive closure on
/// bitsets. Throws SizeMismatchError like compose.
Partition compose_by_transitive_closure(const Partition& p, const Partition& q);

}  // namespace partcat::oracle
