#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "partcat/colored.hpp"
#include "partcat/errors.hpp"
#include "partcat/partition.hpp"
#include "partcat/spatial.hpp"

namespace partcat {

struct ClosureOptions {
  /// When set, the worklist is drained in a pseudo-random order seeded by this
  /// value instead of FIFO. The resulting member set is the same either way.
  std::optional<std::uint64_t> exploration_seed;
};

/// Everything derivable from a generator list and the base partitions by the
/// category operations without any intermediate result exceeding `bound`
/// points.
///
/// Membership is a bounded semi-decision: `contains_within_bound` returning
/// false only means the partition is not derivable inside this bound. Some
/// members of a category are reachable only through larger intermediates, and
/// no bound works in general.
template <class Element>
class ClosureSet {
 public:
  ClosureSet(std::size_t bound, std::vector<Element> generators, std::vector<Element> members)
      : bound_(bound), generators_(std::move(generators)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    index_.insert(members_.begin(), members_.end());
  }

  std::size_t bound() const noexcept { return bound_; }
  bool saturated() const noexcept { return true; }
  const std::vector<Element>& generators() const noexcept { return generators_; }

  /// All members in output order (size, upper count, labels).
  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  /// Throws BoundExceededError when size > bound.
  std::vector<Element> members_of_size(std::size_t size) const {
    check_bound(size);
    std::vector<Element> out;
    for (const auto& m : members_) {
      if (m.size() == size) out.push_back(m);
    }
    return out;
  }

  /// Members with k upper and l lower points. Throws BoundExceededError when
  /// k + l > bound.
  std::vector<Element> members_of_shape(std::size_t k, std::size_t l) const {
    check_bound(k + l);
    std::vector<Element> out;
    for (const auto& m : members_) {
      if (m.upper_count() == k && m.lower_count() == l) out.push_back(m);
    }
    return out;
  }

  /// Throws BoundExceededError when p is larger than the bound.
  bool contains_within_bound(const Element& p) const {
    check_bound(p.size());
    return index_.contains(p);
  }

 private:
  void check_bound(std::size_t size) const {
    if (size > bound_) {
      throw BoundExceededError("bound exceeded: size " + std::to_string(size) +
                               " is larger than the closure bound " + std::to_string(bound_));
    }
  }

  std::size_t bound_;
  std::vector<Element> generators_;
  std::vector<Element> members_;
  std::unordered_set<Element> index_;
};

/// Least set containing the generators, the identity and the pair, closed
/// under involution, the four rotations, vertical reflection, tensor product
/// and composition, where results larger than `bound` are discarded.
///
/// Throws std::invalid_argument for bound == 0 and BoundExceededError for a
/// generator larger than the bound.
ClosureSet<Partition> construct_closure(std::span<const Partition> generators, std::size_t bound,
                                        const ClosureOptions& options = {});

/// Same, seeded with the four colored base partitions.
ClosureSet<ColoredPartition> construct_colored_closure(
    std::span<const ColoredPartition> generators, std::size_t bound,
    const ClosureOptions& options = {});

/// Same, on `levels` levels, seeded with the lifted identity and pair. The
/// bound counts points per level. Generators on another level count raise
/// LevelMismatchError.
ClosureSet<SpatialPartition> construct_spatial_closure(
    std::span<const SpatialPartition> generators, std::size_t levels, std::size_t bound,
    const ClosureOptions& options = {});

}  // namespace partcat
