#include <gtest/gtest.h>

#include "fusion/fusion.hpp"

using namespace fusion;

TEST(Group, CyclicBasics) {
  const auto g = cyclic_group(6);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(g.element_order(1), 6u);
  EXPECT_EQ(g.element_order(2), 3u);
  EXPECT_EQ(g.inverse(1), 5u);
  EXPECT_EQ(g.structure(), "Z2xZ3");
}

TEST(Group, RejectsBadTables) {
  EXPECT_THROW(GroupTable({{0, 1}, {1, 1}}, 0), InvalidGroupTable);
  EXPECT_THROW(GroupTable({{0, 1}, {1, 0}}, 1), InvalidGroupTable);
  EXPECT_THROW(GroupTable({{0, 1, 2}, {1, 2, 0}}, 0), InvalidGroupTable);
}

TEST(Group, NamedGroups) {
  EXPECT_EQ(named_group("V4").structure(), "Z2xZ2");
  EXPECT_EQ(named_group("Z2^3").order(), 8u);
  EXPECT_EQ(named_group("Z2xZ4").abelian_invariants(), (std::vector<std::size_t>{2, 4}));
  EXPECT_FALSE(named_group("S3").is_abelian());
  EXPECT_FALSE(named_group("Q8").is_abelian());
  EXPECT_EQ(named_group("D4").order(), 8u);
  EXPECT_EQ(named_group("A4").order(), 12u);
  EXPECT_EQ(named_group("S4").order(), 24u);
  EXPECT_THROW(named_group("Z65"), UnknownName);
  EXPECT_THROW(named_group("W7"), UnknownName);
}

TEST(Group, EveryCatalogNameResolves) {
  for (const auto& name : catalog_group_names()) {
    const auto g = named_group(name);
    EXPECT_LE(g.order(), 64u) << name;
  }
}

TEST(Group, NormalityAndQuotient) {
  const auto s3 = named_group("S3");
  std::vector<Index> a3, tr;
  for (Index x = 0; x < 6; ++x) {
    if (s3.element_order(x) != 2) a3.push_back(x);
    if (x == s3.identity() || (tr.size() < 2 && s3.element_order(x) == 2)) tr.push_back(x);
  }
  EXPECT_TRUE(s3.is_normal_subgroup(a3));
  EXPECT_TRUE(s3.is_subgroup(tr));
  EXPECT_FALSE(s3.is_normal_subgroup(tr));
  EXPECT_THROW(s3.quotient(tr), NotNormalSubgroup);
  std::vector<Index> coset;
  const auto q = s3.quotient(a3, &coset);
  EXPECT_EQ(q.order(), 2u);
  EXPECT_EQ(coset.size(), 6u);
}

TEST(Group, DirectProductInvariants) {
  const auto g = direct_product(cyclic_group(4), cyclic_group(6));
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(g.structure(), "Z2xZ4xZ3");
}

TEST(Group, Permutations) {
  const auto g = group_from_permutations({{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(g.is_abelian());
}
