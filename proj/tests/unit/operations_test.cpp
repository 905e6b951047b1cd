#include "partcat/operations.hpp"

#include <gtest/gtest.h>

#include "generators.hpp"
#include "partcat/errors.hpp"
#include "partcat/oracles.hpp"

namespace partcat {
namespace {

using testing::Rng;
using testing::random_partition;
using testing::uniform;

Partition identity_of_width(std::size_t n) {
  Partition out;
  for (std::size_t i = 0; i < n; ++i) out = tensor(out, identity_partition());
  return out;
}

TEST(Involution, Examples) {
  EXPECT_EQ(involution(make_partition({1, 2, 2}, {1, 1, 3})), make_partition({1, 1, 2}, {1, 3, 3}));
  EXPECT_EQ(involution(identity_partition()), identity_partition());
  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    const Partition p = random_partition(rng, 12);
    EXPECT_EQ(involution(involution(p)), p);
  }
}

TEST(Tensor, Examples) {
  EXPECT_EQ(tensor(make_partition({1, 2}, {2, 1}), make_partition({1, 1}, {1})),
            make_partition({1, 2, 3, 3}, {2, 1, 3}));
  EXPECT_EQ(tensor(identity_partition(), identity_partition()), make_partition({1, 2}, {1, 2}));
  Rng rng(32);
  for (int i = 0; i < 500; ++i) {
    const Partition p = random_partition(rng, 12);
    EXPECT_EQ(tensor(p, Partition()), p);
    EXPECT_EQ(tensor(Partition(), p), p);
  }
}

TEST(Compose, MergesThroughMiddleRow) {
  const Partition p = make_partition({1, 2, 2}, {1, 2});
  const Partition q = make_partition({1}, {2, 2, 1});
  EXPECT_EQ(compose(p, q), make_partition({1}, {1, 1}));
  EXPECT_EQ(compose_via_dfs(p, q), make_partition({1}, {1, 1}));
  EXPECT_EQ(oracle::compose_by_transitive_closure(p, q), make_partition({1}, {1, 1}));
}

TEST(Compose, SizeMismatch) {
  EXPECT_THROW(compose(identity_partition(), pair_partition()), SizeMismatchError);
  EXPECT_THROW(compose_via_dfs(identity_partition(), pair_partition()), SizeMismatchError);
  EXPECT_THROW(compose(identity_partition(), pair_partition()), DomainError);
}

TEST(Compose, MiddleLoopsVanish) {
  // pair above pair* closes a loop; nothing is left.
  EXPECT_EQ(compose(involution(pair_partition()), pair_partition()), Partition());
  EXPECT_EQ(compose(pair_partition(), involution(pair_partition())),
            make_partition({1, 1}, {2, 2}));
  // A closed loop beside a through-string leaves just the string.
  const Partition cup_id = tensor(pair_partition(), identity_partition());
  const Partition cap_id = involution(cup_id);
  EXPECT_EQ(compose(cap_id, cup_id), identity_partition());
  EXPECT_EQ(compose(cup_id, cap_id), make_partition({1, 1, 2}, {3, 3, 2}));
}

TEST(Compose, IdentityLaw) {
  Rng rng(33);
  for (int i = 0; i < 1000; ++i) {
    const Partition p = random_partition(rng, 12);
    EXPECT_EQ(compose(p, identity_of_width(p.upper_count())), p);
    EXPECT_EQ(compose(identity_of_width(p.lower_count()), p), p);
  }
}

TEST(Compose, AgreesWithDfsAndTransitiveClosure) {
  Rng rng(34);
  for (int i = 0; i < 3000; ++i) {
    const std::size_t k = uniform(rng, 0, 4);
    const std::size_t l = uniform(rng, 0, 4);
    const std::size_t m = uniform(rng, 0, 4);
    const Partition q = random_partition(rng, k, l);
    const Partition p = random_partition(rng, l, m);
    const Partition expected = oracle::compose_by_transitive_closure(p, q);
    EXPECT_EQ(compose(p, q), expected);
    EXPECT_EQ(compose_via_dfs(p, q), expected);
  }
}

TEST(Compose, SizeAndBlockBounds) {
  Rng rng(35);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t l = uniform(rng, 0, 5);
    const Partition q = random_partition(rng, uniform(rng, 0, 5), l);
    const Partition p = random_partition(rng, l, uniform(rng, 0, 5));
    const Partition pq = compose(p, q);
    EXPECT_EQ(pq.size(), q.upper_count() + p.lower_count());
    EXPECT_LE(pq.block_count(), p.block_count() + q.block_count());
    EXPECT_EQ(tensor(p, q).size(), p.size() + q.size());
  }
}

TEST(Rotate, TopLeftExample) {
  EXPECT_EQ(rotate(make_partition({1, 2}, {2, 1}), Corner::top_left),
            make_partition({1}, {2, 1, 2}));
}

TEST(Rotate, EmptySourceRow) {
  EXPECT_THROW(rotate(pair_partition(), Corner::top_left), EmptyRowError);
  EXPECT_THROW(rotate(pair_partition(), Corner::top_right), EmptyRowError);
  EXPECT_THROW(rotate(involution(pair_partition()), Corner::bottom_left), EmptyRowError);
  EXPECT_THROW(rotate(Partition(), Corner::bottom_right), EmptyRowError);
}

TEST(Rotate, InversePairsAndInvariants) {
  Rng rng(36);
  for (int i = 0; i < 2000; ++i) {
    const Partition p = random_partition(rng, 12);
    for (Corner c : {Corner::top_left, Corner::top_right, Corner::bottom_left,
                     Corner::bottom_right}) {
      const bool from_upper = c == Corner::top_left || c == Corner::top_right;
      if ((from_upper ? p.upper_count() : p.lower_count()) == 0) continue;
      const Partition r = rotate(p, c);
      EXPECT_EQ(rotate(r, inverse(c)), p);
      EXPECT_EQ(r.size(), p.size());
      EXPECT_EQ(r.block_count(), p.block_count());
    }
  }
}

TEST(ReflectVertical, Examples) {
  EXPECT_EQ(reflect_vertical(make_partition({1, 2}, {2, 3})), make_partition({1, 2}, {3, 1}));
  EXPECT_EQ(reflect_vertical(identity_partition()), identity_partition());
  Rng rng(37);
  for (int i = 0; i < 1000; ++i) {
    const Partition p = random_partition(rng, 12);
    EXPECT_EQ(reflect_vertical(reflect_vertical(p)), p);
  }
}

TEST(CornerNames, RoundTrip) {
  EXPECT_EQ(to_string(Corner::top_left), "tl");
  EXPECT_EQ(to_string(Corner::bottom_right), "br");
  EXPECT_EQ(inverse(inverse(Corner::top_right)), Corner::top_right);
}

}  // namespace
}  // namespace partcat
