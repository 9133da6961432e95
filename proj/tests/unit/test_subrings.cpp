#include <algorithm>

#include <gtest/gtest.h>

#include "fusion/fusion.hpp"
#include "oracles.hpp"

using namespace fusion;

TEST(Subrings, KnownCounts) {
  EXPECT_EQ(enumerate_subrings(builtin_ring("rep_S3")).size(), 3u);
  EXPECT_EQ(enumerate_subrings(builtin_ring("fibonacci")).size(), 2u);
  EXPECT_EQ(enumerate_subrings(group_ring(named_group("V4"))).size(), 5u);
  EXPECT_EQ(enumerate_subrings(builtin_ring("ising")).size(), 3u);
  EXPECT_EQ(enumerate_subrings(builtin_ring("trivial")).size(), 1u);
}

TEST(Subrings, SortedAndDistinct) {
  const auto subs = enumerate_subrings(tambara_yamagami(named_group("Z2xZ2")));
  EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
  EXPECT_EQ(std::adjacent_find(subs.begin(), subs.end()), subs.end());
  EXPECT_TRUE(subs.front().is_trivial());
}

TEST(Subrings, GroupRingsMatchSubgroupOracle) {
  for (const auto& name : catalog_group_names(16)) {
    const auto g = named_group(name);
    EXPECT_EQ(enumerate_subrings(group_ring(g)).size(), oracle::brute_force_subgroup_count(g)) << name;
  }
}

TEST(Subrings, ClosureIsIdempotentAndMonotone) {
  const FusionRing r = tambara_yamagami(named_group("Z2xZ2"));
  for (Index i = 0; i < r.rank(); ++i) {
    const std::vector<Index> seed{i};
    const Subring s = generated_subring(r, seed);
    EXPECT_EQ(generated_subring(r, s.indices()), s);
    for (Index j = 0; j < r.rank(); ++j) {
      const std::vector<Index> bigger{i, j};
      const Subring t = generated_subring(r, bigger);
      EXPECT_TRUE(std::includes(t.indices().begin(), t.indices().end(), s.indices().begin(), s.indices().end()));
    }
  }
}

TEST(Subrings, RankBound) {
  EXPECT_THROW(enumerate_subrings(group_ring(cyclic_group(30)), 24), RankBoundExceeded);
  EXPECT_NO_THROW(enumerate_subrings(group_ring(cyclic_group(30)), 30));
}

TEST(Subrings, InvertiblesAndPicard) {
  const FusionRing ty = tambara_yamagami(named_group("Z2xZ2"));
  for (Index i = 0; i < 4; ++i) EXPECT_TRUE(is_invertible(ty, i));
  EXPECT_FALSE(is_invertible(ty, 4));
  const auto pic = picard_group(ty);
  EXPECT_EQ(pic.order(), 4u);
  EXPECT_EQ(pic.table.structure(), "Z2xZ2");
  EXPECT_EQ(pointed_part(ty).indices(), (std::vector<Index>{0, 1, 2, 3}));

  const FusionRing s3 = builtin_ring("rep_S3");
  EXPECT_EQ(picard_group(s3).order(), 2u);
  EXPECT_EQ(pointed_part(builtin_ring("fibonacci")).size(), 1u);
}

TEST(Subrings, GeneratedByNonInvertible) {
  const FusionRing s3 = builtin_ring("rep_S3");
  const std::vector<Index> seed{2};
  EXPECT_TRUE(generated_subring(s3, seed).is_full());
}
