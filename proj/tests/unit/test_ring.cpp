#include <gtest/gtest.h>

#include "fusion/fusion.hpp"

using namespace fusion;

namespace {

RawRing z3_raw() {
  RawRing r;
  r.name = "Z3";
  r.rank = 3;
  r.labels = {"1", "a", "b"};
  r.unit = 0;
  r.dual = {0, 2, 1};
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) r.constants.push_back({i, j, (i + j) % 3, 1});
  return r;
}

}  // namespace

TEST(Ring, ValidatesGroupRing) {
  const FusionRing r = validate_ring(z3_raw());
  EXPECT_EQ(r.rank(), 3u);
  EXPECT_EQ(r.dual(1), 2u);
  EXPECT_EQ(r.coefficient(1, 2, 0), 1);
  EXPECT_EQ(r.coefficient(1, 1, 0), 0);
  ASSERT_EQ(r.product(1, 1).size(), 1u);
  EXPECT_EQ(r.product(1, 1)[0].simple, 2u);
  EXPECT_EQ(r.find("b"), std::optional<Index>(2));
  EXPECT_FALSE(r.find("zz"));
}

TEST(Ring, UnitAxiomNamesTuple) {
  RawRing raw = z3_raw();
  std::erase_if(raw.constants, [](const RawRing::Entry& e) { return e.i == 0 && e.j == 2; });
  try {
    validate_ring(raw);
    FAIL() << "expected UnitAxiomViolation";
  } catch (const UnitAxiomViolation& e) {
    EXPECT_EQ(e.axiom(), RingAxiom::Unit);
    EXPECT_EQ(e.where(), (std::vector<std::size_t>{0, 2, 2}));
    EXPECT_NE(std::string(e.what()).find("(0, 2, 2)"), std::string::npos);
  }
}

TEST(Ring, WrongDualIsDualityViolation) {
  RawRing raw = z3_raw();
  raw.dual = {0, 1, 2};
  EXPECT_THROW(validate_ring(raw), DualityViolation);
}

TEST(Ring, FrobeniusAsymmetry) {
  // a*a = 1 + b, b*b = 1, a*b = b*a = b; N_ab^b = 1 but N_bb^a = 0.
  RawRing raw;
  raw.name = "asym";
  raw.rank = 3;
  raw.labels = {"1", "a", "b"};
  raw.dual = {0, 1, 2};
  for (Index i = 0; i < 3; ++i) {
    raw.constants.push_back({0, i, i, 1});
    if (i) raw.constants.push_back({i, 0, i, 1});
  }
  raw.constants.push_back({1, 1, 0, 1});
  raw.constants.push_back({1, 1, 2, 1});
  raw.constants.push_back({2, 2, 0, 1});
  raw.constants.push_back({1, 2, 2, 1});
  raw.constants.push_back({2, 1, 2, 1});
  EXPECT_THROW(validate_ring(raw), FrobeniusSymmetryViolation);
}

TEST(Ring, NonAssociativeRejected) {
  // a^2 = b^2 = 1 + a + b, ab = ba = a + b: Frobenius-symmetric, not associative.
  RawRing raw;
  raw.name = "nonassoc";
  raw.rank = 3;
  raw.labels = {"1", "a", "b"};
  raw.dual = {0, 1, 2};
  for (Index i = 0; i < 3; ++i) {
    raw.constants.push_back({0, i, i, 1});
    if (i) raw.constants.push_back({i, 0, i, 1});
  }
  for (Index a = 1; a < 3; ++a)
    for (Index b = 1; b < 3; ++b) {
      if (a == b) raw.constants.push_back({a, b, 0, 1});
      raw.constants.push_back({a, b, 1, 1});
      raw.constants.push_back({a, b, 2, 1});
    }
  try {
    validate_ring(raw);
    FAIL() << "expected AssociativityViolation";
  } catch (const AssociativityViolation& e) {
    EXPECT_EQ(e.where().size(), 4u);
  }
}

TEST(Ring, StructuralProblemsAreParseErrors) {
  RawRing raw = z3_raw();
  raw.labels.pop_back();
  EXPECT_THROW(validate_ring(raw), ParseError);
  raw = z3_raw();
  raw.constants.push_back({0, 0, 7, 1});
  EXPECT_THROW(validate_ring(raw), ParseError);
  raw = z3_raw();
  raw.constants.push_back({1, 1, 1, -1});
  EXPECT_THROW(validate_ring(raw), ParseError);
}

TEST(Ring, ObjectVectorArithmetic) {
  const FusionRing fib = builtin_ring("fibonacci");
  const auto tau = ObjectVector::simple(fib, 1);
  const auto sq = tau * tau;
  EXPECT_EQ(sq.multiplicity(0), 1);
  EXPECT_EQ(sq.multiplicity(1), 1);
  const auto cube = sq * tau;  // tau^3 = 1 + 2 tau
  EXPECT_EQ(cube.multiplicity(0), 1);
  EXPECT_EQ(cube.multiplicity(1), 2);
  EXPECT_EQ((tau + tau), 2 * tau);
  EXPECT_TRUE(ObjectVector::unit(fib).is_unit_multiple());
  EXPECT_FALSE(sq.is_unit_multiple());
  EXPECT_TRUE(ObjectVector::zero(fib).is_zero());
  EXPECT_EQ(sq.support(), (std::vector<Index>{0, 1}));
}

TEST(Ring, SubringRejectsNonClosedSets) {
  const FusionRing r = group_ring(cyclic_group(4));
  EXPECT_NO_THROW(Subring(r, {0, 2}));
  EXPECT_THROW(Subring(r, {0, 1}), std::invalid_argument);
  EXPECT_THROW(Subring(r, {1, 2}), std::invalid_argument);
  const Subring s(r, {2, 0});
  EXPECT_EQ(s.indices(), (std::vector<Index>{0, 2}));
  EXPECT_TRUE(s.is_proper_nontrivial());
}

TEST(Ring, RestrictionIsARing) {
  const FusionRing r = group_ring(cyclic_group(4));
  const FusionRing sub = restrict_to_subring(Subring(r, {0, 2}));
  EXPECT_EQ(sub.rank(), 2u);
  EXPECT_TRUE(isomorphic(sub, group_ring(cyclic_group(2))));
}

TEST(Ring, ProductRing) {
  const FusionRing p = product_ring(builtin_ring("fibonacci"), group_ring(cyclic_group(2)));
  EXPECT_EQ(p.rank(), 4u);
  EXPECT_EQ(p.label(3), "(tau,a)");
  EXPECT_EQ(p.coefficient(3, 3, 0), 1);
  EXPECT_EQ(p.coefficient(3, 3, 2), 1);
  EXPECT_THROW(product_ring(group_ring(cyclic_group(8)), group_ring(cyclic_group(8)), 32), RankBoundExceeded);
}

TEST(Ring, ProductOfCyclicsIsomorphicToCyclic) {
  const FusionRing z2z3 = product_ring(group_ring(cyclic_group(2)), group_ring(cyclic_group(3)));
  EXPECT_TRUE(isomorphic(z2z3, group_ring(cyclic_group(6))));
  const FusionRing z2z2 = product_ring(group_ring(cyclic_group(2)), group_ring(cyclic_group(2)));
  EXPECT_FALSE(isomorphic(z2z2, group_ring(cyclic_group(4))));
}

TEST(Ring, IsomorphismIgnoresLabels) {
  const FusionRing s3 = builtin_ring("rep_S3");
  const FusionRing other = s3.relabeled("copy", {"e", "s", "w"});
  EXPECT_TRUE(s3.same_structure(other));
  const auto iso = find_isomorphism(s3, other);
  ASSERT_TRUE(iso);
  EXPECT_EQ(*iso, (std::vector<Index>{0, 1, 2}));
  EXPECT_FALSE(isomorphic(s3, builtin_ring("ising")));
}

TEST(Ring, CopiesShareStorage) {
  const FusionRing a = builtin_ring("ising");
  const FusionRing b = a;
  EXPECT_TRUE(a.shares_storage(b));
  EXPECT_FALSE(a.shares_storage(builtin_ring("ising")));
}
