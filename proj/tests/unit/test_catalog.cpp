#include <gtest/gtest.h>

#include "fusion/fusion.hpp"

using namespace fusion;

TEST(Catalog, BuiltinRingsValidate) {
  for (const auto& name : builtin_ring_names()) {
    const FusionRing r = builtin_ring(name);
    EXPECT_NO_THROW(validate_ring(r.to_raw())) << name;
  }
  EXPECT_THROW(builtin_ring("nope"), UnknownName);
}

TEST(Catalog, FibonacciRule) {
  const FusionRing fib = builtin_ring("fibonacci");
  EXPECT_EQ(fib.coefficient(1, 1, 0), 1);
  EXPECT_EQ(fib.coefficient(1, 1, 1), 1);
}

TEST(Catalog, TambaraYamagamiRules) {
  const auto g = named_group("Z5");
  const FusionRing ty = tambara_yamagami(g);
  ASSERT_EQ(ty.rank(), 6u);
  const Index x = 5;
  EXPECT_EQ(ty.label(x), "X");
  EXPECT_EQ(ty.dual(x), x);
  for (Index a = 0; a < 5; ++a) {
    EXPECT_EQ(ty.coefficient(a, x, x), 1);
    EXPECT_EQ(ty.coefficient(x, a, x), 1);
    EXPECT_EQ(ty.coefficient(x, x, a), 1);
  }
  EXPECT_EQ(ty.name(), "TY(Z5)");
  EXPECT_THROW(tambara_yamagami(named_group("S3")), NonAbelianGroup);
}

TEST(Catalog, GroupRingRules) {
  const auto g = named_group("S3");
  const FusionRing r = group_ring(g);
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) EXPECT_EQ(r.coefficient(a, b, g.multiply(a, b)), 1);
  EXPECT_EQ(r.dual(1), g.inverse(1));
}

TEST(Catalog, BuiltinMorphismsValidate) {
  for (const auto& name : builtin_morphism_names()) {
    const RingMorphism f = builtin_morphism(name);
    EXPECT_EQ(f.name(), name);
  }
  EXPECT_THROW(builtin_morphism("nope"), UnknownName);
}

TEST(Catalog, QuotientMorphism) {
  const auto g = cyclic_group(6);
  const std::vector<Index> n{0, 3};
  const RingMorphism f = quotient_morphism(g, n);
  EXPECT_EQ(f.target().rank(), 3u);
  EXPECT_TRUE(f.image(3).is_unit_multiple());
  const std::vector<Index> bad{0, 1};
  EXPECT_THROW(quotient_morphism(g, bad), std::exception);
}
