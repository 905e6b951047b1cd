#include "partcat/closure.hpp"

#include <array>
#include <random>
#include <stdexcept>
#include <utility>

#include "partcat/operations.hpp"

namespace partcat {
namespace {

constexpr std::array<Corner, 4> kCorners = {Corner::top_left, Corner::top_right,
                                            Corner::bottom_left, Corner::bottom_right};

bool has_source_row(std::size_t upper, std::size_t lower, Corner c) {
  return (c == Corner::top_left || c == Corner::top_right) ? upper > 0 : lower > 0;
}

struct PlainOps {
  std::vector<Partition> base() const { return {identity_partition(), pair_partition()}; }

  template <class Emit>
  void unary(const Partition& p, Emit&& emit) const {
    emit(involution(p));
    emit(reflect_vertical(p));
    for (Corner c : kCorners) {
      if (has_source_row(p.upper_count(), p.lower_count(), c)) emit(rotate(p, c));
    }
  }

  Partition tensor_of(const Partition& p, const Partition& q) const { return tensor(p, q); }
  std::optional<Partition> compose_of(const Partition& p, const Partition& q) const {
    return compose(p, q);
  }
};

struct ColoredOps {
  std::vector<ColoredPartition> base() const { return colored_base_partitions(); }

  template <class Emit>
  void unary(const ColoredPartition& p, Emit&& emit) const {
    emit(colored_involution(p));
    emit(colored_reflect_vertical(p));
    for (Corner c : kCorners) {
      if (has_source_row(p.upper_count(), p.lower_count(), c)) emit(colored_rotate(p, c));
    }
  }

  ColoredPartition tensor_of(const ColoredPartition& p, const ColoredPartition& q) const {
    return colored_tensor(p, q);
  }
  std::optional<ColoredPartition> compose_of(const ColoredPartition& p,
                                             const ColoredPartition& q) const {
    if (q.lower_colors() != p.upper_colors()) return std::nullopt;
    return colored_compose(p, q);
  }
};

struct SpatialOps {
  std::size_t levels;

  std::vector<SpatialPartition> base() const { return spatial_base_partitions(levels); }

  template <class Emit>
  void unary(const SpatialPartition& p, Emit&& emit) const {
    emit(spatial_involution(p));
    emit(spatial_reflect_vertical(p));
    for (Corner c : kCorners) {
      if (has_source_row(p.upper_count(), p.lower_count(), c)) emit(spatial_rotate(p, c));
    }
  }

  SpatialPartition tensor_of(const SpatialPartition& p, const SpatialPartition& q) const {
    return spatial_tensor(p, q);
  }
  std::optional<SpatialPartition> compose_of(const SpatialPartition& p,
                                             const SpatialPartition& q) const {
    return spatial_compose(p, q);
  }
};

// Semi-naive worklist: when an element is processed it is combined with every
// already-processed element (itself included) in both orders, so each ordered
// pair is tried exactly once.
template <class Element, class Ops>
ClosureSet<Element> saturate(std::span<const Element> generators, std::size_t bound,
                             const Ops& ops, const ClosureOptions& options) {
  if (bound == 0) throw std::invalid_argument("closure bound must be at least 1");
  for (const auto& g : generators) {
    if (g.size() > bound) {
      throw BoundExceededError("bound exceeded: generator of size " + std::to_string(g.size()) +
                               " is larger than the closure bound " + std::to_string(bound));
    }
  }

  std::vector<Element> members;
  std::unordered_set<Element> seen;
  std::vector<std::size_t> pending;
  auto add = [&](Element e) {
    if (e.size() > bound) return;
    if (!seen.insert(e).second) return;
    pending.push_back(members.size());
    members.push_back(std::move(e));
  };

  for (auto& b : ops.base()) add(std::move(b));
  for (const auto& g : generators) add(g);

  std::optional<std::mt19937_64> rng;
  if (options.exploration_seed) rng.emplace(*options.exploration_seed);
  std::size_t head = 0;
  std::vector<std::size_t> processed;

  while (head < pending.size()) {
    std::size_t current;
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(head, pending.size() - 1);
      std::swap(pending[head], pending[pick(*rng)]);
    }
    current = pending[head++];
    // `members` may reallocate while we add; work on a copy.
    const Element x = members[current];

    ops.unary(x, add);
    processed.push_back(current);
    for (std::size_t other : processed) {
      const Element y = members[other];
      if (x.size() + y.size() <= bound) {
        add(ops.tensor_of(x, y));
        if (other != current) add(ops.tensor_of(y, x));
      }
      // x below y, then y below x.
      if (y.lower_count() == x.upper_count() && y.upper_count() + x.lower_count() <= bound) {
        if (auto c = ops.compose_of(x, y)) add(std::move(*c));
      }
      if (other != current && x.lower_count() == y.upper_count() &&
          x.upper_count() + y.lower_count() <= bound) {
        if (auto c = ops.compose_of(y, x)) add(std::move(*c));
      }
    }
  }

  return ClosureSet<Element>(bound, std::vector<Element>(generators.begin(), generators.end()),
                             std::move(members));
}

}  // namespace

ClosureSet<Partition> construct_closure(std::span<const Partition> generators, std::size_t bound,
                                        const ClosureOptions& options) {
  return saturate(generators, bound, PlainOps{}, options);
}

ClosureSet<ColoredPartition> construct_colored_closure(
    std::span<const ColoredPartition> generators, std::size_t bound,
    const ClosureOptions& options) {
  return saturate(generators, bound, ColoredOps{}, options);
}

ClosureSet<SpatialPartition> construct_spatial_closure(
    std::span<const SpatialPartition> generators, std::size_t levels, std::size_t bound,
    const ClosureOptions& options) {
  if (levels == 0) throw std::invalid_argument("spatial closure needs at least one level");
  for (const auto& g : generators) {
    if (g.levels() != levels) {
      throw LevelMismatchError("level mismatch: generator has " + std::to_string(g.levels()) +
                               " levels, closure has " + std::to_string(levels));
    }
  }
  return saturate(generators, bound, SpatialOps{levels}, options);
}

}  // namespace partcat
