#include "partcat/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace partcat {
namespace {

// Map keyed by small labels, backed by a vector. Slot value 0 means unset;
// assigned canonical labels start at 1. Values are at most the label count,
// so 32-bit slots suffice below 2^32 labels.
class DenseLabelMap {
 public:
  struct Slot {
    std::uint32_t second = 0;
  };

  explicit DenseLabelMap(Label max_key) : slots_(static_cast<std::size_t>(max_key) + 1) {}

  std::pair<Slot*, bool> try_emplace(Label key, Label value) {
    Slot& slot = slots_[static_cast<std::size_t>(key)];
    if (slot.second != 0) return {&slot, false};
    slot.second = static_cast<std::uint32_t>(value);
    return {&slot, true};
  }

 private:
  std::vector<Slot> slots_;
};

void check_length(std::size_t upper, std::size_t lower, std::size_t labels) {
  if (upper + lower != labels) {
    throw std::invalid_argument("partition has " + std::to_string(upper) + " upper and " +
                                std::to_string(lower) + " lower points but " +
                                std::to_string(labels) + " labels");
  }
}

}  // namespace

std::size_t normalize_labels(std::span<Label> labels) {
  if (labels.empty()) return 0;
  const Label max_label = *std::max_element(labels.begin(), labels.end());
  if (max_label <= 4 * static_cast<Label>(labels.size()) + 64 &&
      labels.size() < std::numeric_limits<std::uint32_t>::max()) {
    DenseLabelMap map(max_label);
    return relabel_first_occurrence(labels, map);
  }
  std::unordered_map<Label, Label> map;
  map.reserve(labels.size());
  return relabel_first_occurrence(labels, map);
}

Partition::Partition(std::size_t upper, std::size_t lower, std::vector<Label> blocks)
    : upper_count_(upper), blocks_(std::move(blocks)) {
  check_length(upper, lower, blocks_.size());
  block_count_ = normalize_labels(blocks_);
}

Partition::Partition(std::span<const Label> upper, std::span<const Label> lower)
    : upper_count_(upper.size()) {
  blocks_.reserve(upper.size() + lower.size());
  blocks_.insert(blocks_.end(), upper.begin(), upper.end());
  blocks_.insert(blocks_.end(), lower.begin(), lower.end());
  block_count_ = normalize_labels(blocks_);
}

Partition::Partition(std::initializer_list<Label> upper, std::initializer_list<Label> lower)
    : Partition(std::span<const Label>(upper.begin(), upper.size()),
                std::span<const Label>(lower.begin(), lower.size())) {}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.upper_count_ <=> b.upper_count_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.blocks_.begin(), a.blocks_.end(),
                                                b.blocks_.begin(), b.blocks_.end());
}

Partition make_partition(std::span<const Label> upper, std::span<const Label> lower) {
  return Partition(upper, lower);
}

Partition make_partition(std::initializer_list<Label> upper, std::initializer_list<Label> lower) {
  return Partition(upper, lower);
}

Partition normalize(const LabeledPartition& p) {
  return Partition(p.upper_count, p.lower_count, p.blocks);
}

bool equivalent(const LabeledPartition& p, const LabeledPartition& q) {
  return normalize(p) == normalize(q);
}

LabeledPartition make_disjoint(const LabeledPartition& p, const LabeledPartition& q) {
  Label shift = 1;
  if (!q.blocks.empty()) shift += *std::max_element(q.blocks.begin(), q.blocks.end());
  LabeledPartition out{p.upper_count, p.lower_count, p.blocks};
  for (Label& label : out.blocks) label += shift;
  return out;
}

LabeledPartition make_disjoint(const Partition& p, const Partition& q) {
  LabeledPartition out = p.labeled();
  const Label shift = 1 + static_cast<Label>(q.block_count());
  for (Label& label : out.blocks) label += shift;
  return out;
}

Partition kernel_partition(std::span<const Label> tuple) {
  return Partition(std::span<const Label>{}, tuple);
}

Partition identity_partition() { return Partition({1}, {1}); }

Partition pair_partition() { return Partition({}, {1, 1}); }

}  // namespace partcat

std::size_t std::hash<partcat::Partition>::operator()(const partcat::Partition& p) const noexcept {
  // FNV-1a over the row split and labels.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(p.upper_count());
  for (partcat::Label label : p.blocks()) mix(label);
  return static_cast<std::size_t>(h);
}
