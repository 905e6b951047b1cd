#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace partcat {

using Label = std::uint64_t;

/// A block-label tuple (k, l, b) with no normalization applied. Position i < k
/// is the i-th upper point, position k + j the j-th lower point; two points
/// share a block iff their labels are equal.
struct LabeledPartition {
  std::size_t upper_count = 0;
  std::size_t lower_count = 0;
  std::vector<Label> blocks;

  std::size_t size() const noexcept { return upper_count + lower_count; }
  friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;
};

/// Canonical two-row set partition.
///
/// Labels are assigned in first-occurrence order (upper row left to right,
/// then lower row left to right) starting at 1, so structural equality is
/// equivalence and the value can be hashed directly. Every constructor
/// normalizes; a Partition is never observed in non-canonical form.
class Partition {
 public:
  /// The empty partition (0, 0, ()).
  Partition() = default;

  /// Normalizes `blocks`, which must have exactly upper + lower entries.
  /// Throws std::invalid_argument otherwise.
  Partition(std::size_t upper, std::size_t lower, std::vector<Label> blocks);

  Partition(std::span<const Label> upper, std::span<const Label> lower);
  Partition(std::initializer_list<Label> upper, std::initializer_list<Label> lower);

  std::size_t upper_count() const noexcept { return upper_count_; }
  std::size_t lower_count() const noexcept { return blocks_.size() - upper_count_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }

  /// Number of blocks; in canonical form this is the largest label.
  std::size_t block_count() const noexcept { return block_count_; }

  std::span<const Label> blocks() const noexcept { return blocks_; }
  std::span<const Label> upper() const noexcept {
    return std::span<const Label>(blocks_).first(upper_count_);
  }
  std::span<const Label> lower() const noexcept {
    return std::span<const Label>(blocks_).subspan(upper_count_);
  }

  LabeledPartition labeled() const { return {upper_count(), lower_count(), blocks_}; }

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.upper_count_ == b.upper_count_ && a.blocks_ == b.blocks_;
  }

  /// Output order: (size, upper count, block vector lexicographic).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

 private:
  std::size_t upper_count_ = 0;
  std::size_t block_count_ = 0;
  std::vector<Label> blocks_;
};

/// Builds the canonical partition with the given rows. Labels may be any
/// non-negative integers.
Partition make_partition(std::span<const Label> upper, std::span<const Label> lower);
Partition make_partition(std::initializer_list<Label> upper, std::initializer_list<Label> lower);

/// Canonical form of a labeled tuple. Throws std::invalid_argument if the
/// label count differs from upper_count + lower_count.
Partition normalize(const LabeledPartition& p);

/// Relabels `labels` in place to 1, 2, 3, ... by first occurrence and returns
/// the number of distinct labels.
std::size_t normalize_labels(std::span<Label> labels);

/// Single-pass first-occurrence relabeling through an associative map. Each
/// label costs exactly one `try_emplace`, so a pass over n labels makes n map
/// accesses. Exposed so tests can instrument the map.
template <class Map>
std::size_t relabel_first_occurrence(std::span<Label> labels, Map& map) {
  Label next = 1;
  for (Label& label : labels) {
    auto [it, inserted] = map.try_emplace(label, next);
    if (inserted) ++next;
    label = it->second;
  }
  return static_cast<std::size_t>(next - 1);
}

bool equivalent(const LabeledPartition& p, const LabeledPartition& q);
inline bool equivalent(const Partition& p, const Partition& q) { return p == q; }

/// A tuple equivalent to `p` whose labels are all greater than every label of
/// `q` (shift by 1 + max label of q; shift 1 when q is empty).
LabeledPartition make_disjoint(const LabeledPartition& p, const LabeledPartition& q);
LabeledPartition make_disjoint(const Partition& p, const Partition& q);

/// |p| = upper_count + lower_count.
inline std::size_t size(const Partition& p) noexcept { return p.size(); }

/// The partition with no upper points and one lower point per tuple entry,
/// where two lower points share a block iff their entries are equal.
Partition kernel_partition(std::span<const Label> tuple);

/// Base partitions of every category.
Partition identity_partition();
Partition pair_partition();

}  // namespace partcat

template <>
struct std::hash<partcat::Partition> {
  std::size_t operator()(const partcat::Partition& p) const noexcept;
};
