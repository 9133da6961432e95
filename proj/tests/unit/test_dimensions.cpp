#include <cmath>

#include <gtest/gtest.h>

#include "fusion/fusion.hpp"
#include "oracles.hpp"

using namespace fusion;

TEST(Dimensions, FibonacciGoldenRatio) {
  const auto d = fp_dimensions(builtin_ring("fibonacci"));
  EXPECT_DOUBLE_EQ(d[0], 1.0);
  EXPECT_NEAR(d[1], oracle::golden_ratio(), 1e-12);
  EXPECT_NEAR(d.global, 1.0 + oracle::golden_ratio() * oracle::golden_ratio(), 1e-12);
  EXPECT_FALSE(d.integral);
  EXPECT_FALSE(d.weakly_integral);
  EXPECT_EQ(d.weak_integrality, WeakIntegrality::No);
  EXPECT_FALSE(d.squared_dims);
}

TEST(Dimensions, TambaraYamagamiSqrtOrder) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto d = fp_dimensions(tambara_yamagami(cyclic_group(n)));
    EXPECT_NEAR(d[n], std::sqrt(static_cast<double>(n)), 1e-9) << n;
    EXPECT_NEAR(d.global, 2.0 * static_cast<double>(n), 1e-9) << n;
    EXPECT_EQ(d.weak_integrality, WeakIntegrality::Exact) << n;
    ASSERT_TRUE(d.exact_global);
    EXPECT_EQ(*d.exact_global, static_cast<std::int64_t>(2 * n));
    const bool square = exact::is_perfect_square(static_cast<std::int64_t>(n));
    EXPECT_EQ(d.integral, square) << n;
  }
}

TEST(Dimensions, GroupRingsAllOnes) {
  for (const auto& name : catalog_group_names(16)) {
    const auto g = named_group(name);
    const auto d = fp_dimensions(group_ring(g));
    ASSERT_TRUE(d.integer_dims) << name;
    for (auto v : *d.integer_dims) EXPECT_EQ(v, 1) << name;
    EXPECT_EQ(*d.exact_global, static_cast<std::int64_t>(g.order()));
  }
}

TEST(Dimensions, RepS3AndIsing) {
  const auto s3 = fp_dimensions(builtin_ring("rep_S3"));
  ASSERT_TRUE(s3.integer_dims);
  EXPECT_EQ(*s3.integer_dims, (std::vector<std::int64_t>{1, 1, 2}));
  const auto ising = fp_dimensions(builtin_ring("ising"));
  EXPECT_FALSE(ising.integral);
  EXPECT_EQ(ising.weak_integrality, WeakIntegrality::Exact);
  EXPECT_NEAR(ising[2], std::sqrt(2.0), 1e-12);
  EXPECT_EQ(*ising.exact_global, 4);
}

TEST(Dimensions, ResidualIsSmall) {
  const auto d = fp_dimensions(tambara_yamagami(named_group("Z3xZ3")));
  EXPECT_LT(d.residual, 1e-9);
  EXPECT_GT(d.iterations, 0u);
}

TEST(Dimensions, IterationBudgetEnforced) {
  DimensionOptions o;
  o.max_iterations = 1;
  EXPECT_THROW(fp_dimensions(builtin_ring("fibonacci"), o), NonConvergence);
}

TEST(Dimensions, ExactIntegerDimensionWithoutGlobalIntegrality) {
  const FusionRing p = product_ring(builtin_ring("fibonacci"), group_ring(cyclic_group(2)));
  const auto d = fp_dimensions(p);
  EXPECT_EQ(exact_integer_dimension(p, d, 0), 1);
  EXPECT_EQ(exact_integer_dimension(p, d, 1), 1);
  EXPECT_FALSE(exact_integer_dimension(p, d, 2));
}

TEST(Dimensions, ObjectDimension) {
  const FusionRing s3 = builtin_ring("rep_S3");
  const auto d = fp_dimensions(s3);
  const ObjectVector v(s3, {1, 0, 2});
  EXPECT_DOUBLE_EQ(fpdim(v, d), 5.0);
  EXPECT_EQ(exact_fpdim(v, d), 5);
}

TEST(Exact, SquareRootsAndPrimes) {
  EXPECT_EQ(exact::isqrt(0), 0);
  EXPECT_EQ(exact::isqrt(99), 9);
  EXPECT_EQ(exact::isqrt(100), 10);
  EXPECT_TRUE(exact::is_perfect_square(49));
  EXPECT_FALSE(exact::is_perfect_square(50));
  EXPECT_TRUE(exact::is_prime(13));
  EXPECT_FALSE(exact::is_prime(1));
  EXPECT_FALSE(exact::is_prime(91));
  EXPECT_EQ(exact::smallest_prime_factor(91), 7);
  EXPECT_EQ(exact::smallest_prime_factor(97), 97);
  const auto s = exact::simplify_sqrt(72);
  EXPECT_EQ(s.outside, 6);
  EXPECT_EQ(s.radicand, 2);
}

TEST(Exact, SurdArithmetic) {
  const auto p = exact::multiply({1, 2}, {3, 6});  // sqrt2 * 3 sqrt6 = 6 sqrt3
  EXPECT_EQ(p.outside, 6);
  EXPECT_EQ(p.radicand, 3);
  exact::SurdSum a, b;
  a.add({1, 2});
  a.add({1, 2});
  b.add({2, 2});
  EXPECT_EQ(a, b);
  b.add({1, 3});
  EXPECT_FALSE(a == b);
}

TEST(Exact, RationalsReduce) {
  const auto r = exact::Rational::of(6, -4);
  EXPECT_EQ(r.num, -3);
  EXPECT_EQ(r.den, 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_TRUE(exact::Rational::of(8, 4).is_integer());
  EXPECT_THROW(exact::checked_mul(INT64_MAX, 2), Error);
}

TEST(Exact, PositiveEigenvector) {
  // [[0,1],[1,1]]: Perron root is irrational, so neither 1 nor 2 qualifies.
  EXPECT_FALSE(exact::has_positive_eigenvector(std::vector<std::int64_t>{0, 1, 1, 1}, 2, 1));
  EXPECT_FALSE(exact::has_positive_eigenvector(std::vector<std::int64_t>{0, 1, 1, 1}, 2, 2));
  // [[1,1],[1,1]] has eigenvalue 2 with eigenvector (1,1); 0 has (1,-1).
  EXPECT_TRUE(exact::has_positive_eigenvector(std::vector<std::int64_t>{1, 1, 1, 1}, 2, 2));
  EXPECT_FALSE(exact::has_positive_eigenvector(std::vector<std::int64_t>{1, 1, 1, 1}, 2, 0));
}

TEST(Exact, VerifiesDimensionVectors) {
  const FusionRing s3 = builtin_ring("rep_S3");
  EXPECT_TRUE(exact::verify_integer_dimensions(s3, std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_FALSE(exact::verify_integer_dimensions(s3, std::vector<std::int64_t>{1, 1, 3}));
  const FusionRing ising = builtin_ring("ising");
  EXPECT_TRUE(exact::verify_sqrt_dimensions(ising, std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_FALSE(exact::verify_sqrt_dimensions(ising, std::vector<std::int64_t>{1, 1, 3}));
}
