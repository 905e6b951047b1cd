#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "partcat/colored.hpp"
#include "partcat/errors.hpp"
#include "partcat/spatial.hpp"
#include "spatial_oracle.hpp"

namespace partcat {
namespace {

using testing::Rng;
using testing::uniform;
constexpr Color W = Color::white;
constexpr Color B = Color::black;

const std::array<Corner, 4> kCorners = {Corner::top_left, Corner::top_right, Corner::bottom_left,
                                        Corner::bottom_right};

bool can_rotate(std::size_t upper, std::size_t lower, Corner c) {
  return (c == Corner::top_left || c == Corner::top_right) ? upper > 0 : lower > 0;
}

// --- colored --------------------------------------------------------------

TEST(Colored, ConstructorChecksColorLengths) {
  EXPECT_THROW(ColoredPartition(identity_partition(), {W, W}, {W}), std::invalid_argument);
  EXPECT_NO_THROW(ColoredPartition(identity_partition(), {W}, {B}));
}

TEST(Colored, ComposeColorMismatch) {
  const ColoredPartition white_id(identity_partition(), {W}, {W});
  const ColoredPartition black_id(identity_partition(), {B}, {B});
  EXPECT_THROW(colored_compose(white_id, black_id), ColorMismatchError);
  EXPECT_EQ(colored_compose(white_id, white_id), white_id);
  const ColoredPartition pair(pair_partition(), {}, {W, B});
  EXPECT_THROW(colored_compose(white_id, pair), SizeMismatchError);
}

TEST(Colored, TensorConcatenatesColors) {
  const ColoredPartition white_id(identity_partition(), {W}, {W});
  const ColoredPartition black_id(identity_partition(), {B}, {B});
  const ColoredPartition t = colored_tensor(white_id, black_id);
  EXPECT_EQ(t.base(), make_partition({1, 2}, {1, 2}));
  EXPECT_EQ(t.upper_colors(), (ColorString{W, B}));
  EXPECT_EQ(t.lower_colors(), (ColorString{W, B}));
}

TEST(Colored, InvolutionSwapsColorStrings) {
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    const ColoredPartition p = testing::random_colored(rng, uniform(rng, 0, 5), uniform(rng, 0, 5));
    const ColoredPartition s = colored_involution(p);
    EXPECT_EQ(s.upper_colors(), p.lower_colors());
    EXPECT_EQ(s.lower_colors(), p.upper_colors());
    EXPECT_EQ(colored_involution(s), p);
  }
}

TEST(Colored, BasePartitions) {
  const auto bases = colored_base_partitions();
  ASSERT_EQ(bases.size(), 4u);
  int identities = 0;
  int pairs = 0;
  for (const auto& b : bases) {
    if (b.base() == identity_partition()) {
      ++identities;
      EXPECT_EQ(b.upper_colors(), b.lower_colors());
    } else {
      ++pairs;
      EXPECT_EQ(b.base(), pair_partition());
      EXPECT_NE(b.lower_colors()[0], b.lower_colors()[1]);
    }
  }
  EXPECT_EQ(identities, 2);
  EXPECT_EQ(pairs, 2);
  EXPECT_NE(bases[2].lower_colors(), bases[3].lower_colors());
}

TEST(Colored, RotationInvertsMovedColor) {
  const ColoredPartition p(make_partition({1, 2}, {2, 1}), {W, B}, {B, B});
  const ColoredPartition r = colored_rotate(p, Corner::top_left);
  EXPECT_EQ(r.base(), make_partition({1}, {2, 1, 2}));
  EXPECT_EQ(r.upper_colors(), (ColorString{B}));
  EXPECT_EQ(r.lower_colors(), (ColorString{B, B, B}));
  // Rotating a white-black pair's first point up gives a black identity.
  const ColoredPartition pair(pair_partition(), {}, {W, B});
  const ColoredPartition bent = colored_rotate(pair, Corner::bottom_left);
  EXPECT_EQ(bent, ColoredPartition(identity_partition(), {B}, {B}));
}

TEST(Colored, ForgettingColorsCommutesWithOperations) {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t l = uniform(rng, 0, 4);
    const ColoredPartition q = testing::random_colored(rng, uniform(rng, 0, 4), l);
    ColoredPartition p = testing::random_colored(rng, l, uniform(rng, 0, 4));
    EXPECT_EQ(colored_tensor(p, q).base(), tensor(p.base(), q.base()));
    EXPECT_EQ(colored_involution(p).base(), involution(p.base()));
    EXPECT_EQ(colored_reflect_vertical(p).base(), reflect_vertical(p.base()));
    for (Corner c : kCorners) {
      if (can_rotate(p.upper_count(), p.lower_count(), c)) {
        EXPECT_EQ(colored_rotate(p, c).base(), rotate(p.base(), c));
        EXPECT_EQ(colored_rotate(colored_rotate(p, c), inverse(c)), p);
      }
    }
    // Succeeds iff the interface color strings agree.
    if (p.upper_colors() == q.lower_colors()) {
      EXPECT_EQ(colored_compose(p, q).base(), compose(p.base(), q.base()));
    } else {
      EXPECT_THROW(colored_compose(p, q), ColorMismatchError);
    }
    p = ColoredPartition(p.base(), q.lower_colors(), p.lower_colors());
    const ColoredPartition pq = colored_compose(p, q);
    EXPECT_EQ(pq.upper_colors(), q.upper_colors());
    EXPECT_EQ(pq.lower_colors(), p.lower_colors());
  }
}

TEST(Colored, ReflectionReversesAndInverts) {
  const ColoredPartition p(make_partition({1, 2}, {2}), {W, B}, {W});
  const ColoredPartition r = colored_reflect_vertical(p);
  EXPECT_EQ(r.upper_colors(), (ColorString{W, B}));
  EXPECT_EQ(r.lower_colors(), (ColorString{B}));
  EXPECT_EQ(colored_reflect_vertical(r), p);
}

// Reflection as a composite: tl k times sends the upper row, reversed, to the
// front of the lower row; br l times sends the old lower row, reversed, up;
// involution swaps back. Every point moves once, so every color flips once.
TEST(Colored, ReflectionEqualsRotationComposite) {
  Rng rng(43);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = uniform(rng, 0, 4);
    const std::size_t l = uniform(rng, 0, 4);
    const ColoredPartition p = testing::random_colored(rng, k, l);
    ColoredPartition colored = p;
    Partition plain = p.base();
    for (std::size_t j = 0; j < k; ++j) {
      colored = colored_rotate(colored, Corner::top_left);
      plain = rotate(plain, Corner::top_left);
    }
    for (std::size_t j = 0; j < l; ++j) {
      colored = colored_rotate(colored, Corner::bottom_right);
      plain = rotate(plain, Corner::bottom_right);
    }
    EXPECT_EQ(involution(plain), reflect_vertical(p.base()));
    EXPECT_EQ(colored_involution(colored), colored_reflect_vertical(p));
  }
}

// --- spatial --------------------------------------------------------------

TEST(Spatial, ThreeLevelExampleFlattens) {
  // One upper point and two lower points on three levels. The upper point's
  // levels are strung to the first lower point with levels 2 and 3 swapped;
  // levels 1 and 2 of the second lower point are joined, level 3 is alone.
  const SpatialDiagram d{1, 2, 3, {{10, 20, 30}, {10, 30, 20}, {40, 40, 50}}};
  const Partition flat = flatten(d);
  EXPECT_EQ(flat.upper_count(), 3u);
  EXPECT_EQ(flat.lower_count(), 6u);
  EXPECT_EQ(flat, make_partition({1, 2, 3}, {1, 3, 2, 4, 4, 5}));
}

TEST(Spatial, OneLevelIsIdentityReindexing) {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const Partition p = testing::random_partition(rng, 8);
    SpatialDiagram d{p.upper_count(), p.lower_count(), 1, {}};
    for (Label l : p.blocks()) d.points.push_back({l});
    EXPECT_EQ(flatten(d), p);
  }
}

TEST(Spatial, UnflattenRoundTrip) {
  Rng rng(44);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t m = uniform(rng, 1, 4);
    const std::size_t k = uniform(rng, 0, 3);
    const std::size_t l = uniform(rng, 0, 6 - k);
    const SpatialPartition sp = testing::random_spatial(rng, m, k, l);
    const SpatialDiagram d = unflatten(sp);
    EXPECT_EQ(d.upper_count, k);
    EXPECT_EQ(d.lower_count, l);
    EXPECT_EQ(to_spatial(d), sp);
    EXPECT_EQ(flatten(unflatten(to_spatial(d))), flatten(d));
  }
}

TEST(Spatial, DivisibilityAndLevelErrors) {
  EXPECT_THROW(SpatialPartition(2, identity_partition()), DivisibilityError);
  EXPECT_THROW(unflatten(2, make_partition({1}, {1, 1, 1})), DivisibilityError);
  EXPECT_THROW(SpatialPartition(0, Partition()), std::invalid_argument);
  const SpatialPartition a = lift_to_levels(identity_partition(), 2);
  const SpatialPartition b = lift_to_levels(identity_partition(), 3);
  EXPECT_THROW(spatial_compose(a, b), LevelMismatchError);
  EXPECT_THROW(spatial_tensor(a, b), LevelMismatchError);
  EXPECT_THROW(spatial_compose(a, lift_to_levels(pair_partition(), 2)), SizeMismatchError);
}

TEST(Spatial, LiftToLevels) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const SpatialPartition id = lift_to_levels(identity_partition(), m);
    std::vector<Label> ramp(m);
    std::iota(ramp.begin(), ramp.end(), 1);
    EXPECT_EQ(id.flattened(), make_partition(ramp, ramp));
  }
  EXPECT_EQ(lift_to_levels(pair_partition(), 1).flattened(), pair_partition());
  Rng rng(45);
  for (int i = 0; i < 200; ++i) {
    const Partition p = testing::random_partition(rng, 6);
    const std::size_t m = uniform(rng, 1, 4);
    const SpatialPartition lifted = lift_to_levels(p, m);
    EXPECT_EQ(lifted.flattened().block_count(), m * p.block_count());
    for (const auto& col : unflatten(lifted).points) EXPECT_EQ(col.size(), m);
  }
  EXPECT_EQ(spatial_base_partitions(3).size(), 2u);
}

TEST(Spatial, OneLevelMatchesPlainOperations) {
  Rng rng(46);
  for (int i = 0; i < 500; ++i) {
    const std::size_t l = uniform(rng, 0, 4);
    const Partition q = testing::random_partition(rng, uniform(rng, 0, 4), l);
    const Partition p = testing::random_partition(rng, l, uniform(rng, 0, 4));
    const SpatialPartition sp(1, p);
    const SpatialPartition sq(1, q);
    EXPECT_EQ(spatial_compose(sp, sq).flattened(), compose(p, q));
    EXPECT_EQ(spatial_tensor(sp, sq).flattened(), tensor(p, q));
    EXPECT_EQ(spatial_involution(sp).flattened(), involution(p));
    EXPECT_EQ(spatial_reflect_vertical(sp).flattened(), reflect_vertical(p));
    for (Corner c : kCorners) {
      if (can_rotate(p.upper_count(), p.lower_count(), c)) {
        EXPECT_EQ(spatial_rotate(sp, c).flattened(), rotate(p, c));
      }
    }
  }
}

TEST(Spatial, FlatteningIsFunctorial) {
  Rng rng(47);
  for (int i = 0; i < 500; ++i) {
    const std::size_t m = uniform(rng, 1, 4);
    const std::size_t l = uniform(rng, 0, 3);
    const SpatialPartition q = testing::random_spatial(rng, m, uniform(rng, 0, 3), l);
    const SpatialPartition p = testing::random_spatial(rng, m, l, uniform(rng, 0, 3));
    const SpatialDiagram dp = unflatten(p);
    const SpatialDiagram dq = unflatten(q);
    EXPECT_EQ(flatten(testing::diagram_compose(dp, dq)), spatial_compose(p, q).flattened());
    EXPECT_EQ(flatten(testing::diagram_tensor(dp, dq)), spatial_tensor(p, q).flattened());
    EXPECT_EQ(flatten(testing::diagram_involution(dp)), spatial_involution(p).flattened());
  }
}

TEST(Spatial, ColumnRotationsAndReflection) {
  Rng rng(48);
  for (int i = 0; i < 500; ++i) {
    const std::size_t m = uniform(rng, 1, 3);
    const SpatialPartition p =
        testing::random_spatial(rng, m, uniform(rng, 0, 3), uniform(rng, 0, 3));
    for (Corner c : kCorners) {
      if (!can_rotate(p.upper_count(), p.lower_count(), c)) {
        EXPECT_THROW(spatial_rotate(p, c), EmptyRowError);
        continue;
      }
      const SpatialPartition r = spatial_rotate(p, c);
      EXPECT_EQ(r.levels(), m);
      EXPECT_EQ(r.size(), p.size());
      EXPECT_EQ(spatial_rotate(r, inverse(c)), p);
    }
    EXPECT_EQ(spatial_reflect_vertical(spatial_reflect_vertical(p)), p);
  }
  // Rotating the lifted identity's column gives the lifted pair.
  EXPECT_EQ(spatial_rotate(lift_to_levels(identity_partition(), 3), Corner::top_left),
            lift_to_levels(pair_partition(), 3));
}

}  // namespace
}  // namespace partcat
