#include <gtest/gtest.h>

#include "fusion/fusion.hpp"
#include "oracles.hpp"

using namespace fusion;

TEST(Morphism, RestrictionRowsMatchCharacters) {
  EXPECT_EQ(builtin_morphism("repS3_res_Z3").image_rows(), oracle::s3_restrict_to_z3());
  EXPECT_EQ(builtin_morphism("repS3_res_Z2").image_rows(), oracle::s3_restrict_to_z2());
}

TEST(Morphism, InducedAlgebraIsTrivialMultiplicity) {
  // m_X(A) = <Res X, 1>, the first column of the restriction matrix.
  for (const char* name : {"repS3_res_Z3", "repS3_res_Z2"}) {
    const auto f = builtin_morphism(name);
    const auto rows = f.image_rows();
    const auto a = induced_algebra(f);
    for (Index i = 0; i < rows.size(); ++i) EXPECT_EQ(a.vector[i], rows[i][0]) << name;
  }
}

TEST(Morphism, RepS3ToZ3) {
  const auto f = builtin_morphism("repS3_res_Z3");
  EXPECT_TRUE(is_dominant(f));
  EXPECT_NEAR(fp_index(f), 2.0, 1e-12);
  const auto n = is_normal(f);
  EXPECT_TRUE(n.normal);
  EXPECT_TRUE(n.criteria_agree());
  EXPECT_EQ(kernel_subring(f).indices(), (std::vector<Index>{0, 1}));
  const auto r = small_index_classification(f);
  EXPECT_EQ(r.kind, IndexClassification::EquivariantizationZ2);
  EXPECT_EQ(r.integer_index, 2);
}

TEST(Morphism, RepS3ToZ2NotNormal) {
  const auto f = builtin_morphism("repS3_res_Z2");
  EXPECT_NEAR(fp_index(f), 3.0, 1e-12);
  const auto n = is_normal(f);
  EXPECT_FALSE(n.normal);
  EXPECT_TRUE(n.criteria_agree());
  ASSERT_TRUE(n.first_failure);
  EXPECT_EQ(n.evidence[*n.first_failure].label, "V");
  EXPECT_EQ(n.evidence[*n.first_failure].multiplicity, 1);
  const auto r = small_index_classification(f);
  EXPECT_EQ(r.kind, IndexClassification::NoClaim);
  const auto c = exact_sequence_certificate(f);
  EXPECT_FALSE(c.certified);
}

TEST(Morphism, Z4ToZ2Certified) {
  const auto c = exact_sequence_certificate(builtin_morphism("z4_to_z2"));
  EXPECT_TRUE(c.certified);
  EXPECT_TRUE(c.multiplicativity_exact);
  EXPECT_EQ(c.multiplicativity_summary(), "4 = 2·2");
  EXPECT_EQ(c.qualifier, kRingLevelQualifier);
}

TEST(Morphism, SumOfInvertiblesOnTy4) {
  const auto f = builtin_morphism("ty4_to_z2");
  const auto r = sum_of_invertibles_analysis(f);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.gamma_structure, "Z2xZ2");
  EXPECT_TRUE(r.multiplicities_one);
  EXPECT_EQ(kernel_subring(f), pointed_part(f.source()));
  const auto c = exact_sequence_certificate(f);
  EXPECT_TRUE(c.certified);
  EXPECT_EQ(c.multiplicativity_summary(), "8 = 4·2");
}

TEST(Morphism, SumOfInvertiblesNotApplicable) {
  const auto r = sum_of_invertibles_analysis(builtin_morphism("repS3_res_Z2"));
  EXPECT_FALSE(r.applicable);
  ASSERT_TRUE(r.first_non_invertible);
  EXPECT_EQ(*r.first_non_invertible, 2u);
}

TEST(Morphism, ValidationOrder) {
  const FusionRing z3 = group_ring(cyclic_group(3));
  const FusionRing z2 = group_ring(cyclic_group(2));
  EXPECT_THROW(validate_morphism(z3, z3, {{0, 1, 0}, {0, 1, 0}, {0, 0, 1}}), UnitImageViolation);
  EXPECT_THROW(validate_morphism(z3, z3, {{1, 0, 0}, {0, 1, 0}, {0, 1, 0}}), DualCompatViolation);
  EXPECT_THROW(validate_morphism(z2, z2, {{1, 0}, {1, 1}}), DimensionMismatch);
  EXPECT_THROW(validate_morphism(z3, z3, {{1, 0, 0}, {0, 1, 0}}), ParseError);

  // Dimension-preserving, dual-compatible, unital but not multiplicative:
  // Z4 -> Z2 sending a to g, a^2 to g.
  const FusionRing z4 = group_ring(cyclic_group(4));
  EXPECT_THROW(validate_morphism(z4, z2, {{1, 0}, {0, 1}, {0, 1}, {0, 1}}), MultiplicativityViolation);
}

TEST(Morphism, DimensionCheckedBeforeMultiplicativity) {
  const FusionRing ty = tambara_yamagami(named_group("Z2"));
  const FusionRing z2 = group_ring(cyclic_group(2));
  EXPECT_THROW(validate_morphism(ty, z2, {{1, 0}, {1, 0}, {1, 1}}), DimensionMismatch);
}

TEST(Morphism, FibonacciHasNoQuotientToTrivial) {
  EXPECT_THROW(validate_morphism(builtin_ring("fibonacci"), builtin_ring("trivial"), {{1}, {2}}),
               DimensionMismatch);
}

TEST(Morphism, IdentityIsTriviallyExact) {
  const auto f = identity_morphism(builtin_ring("ising"));
  EXPECT_NEAR(fp_index(f), 1.0, 1e-12);
  const auto c = exact_sequence_certificate(f);
  EXPECT_TRUE(c.certified);
  EXPECT_TRUE(c.kernel.is_trivial());
}

TEST(Morphism, NotDominant) {
  const FusionRing z2 = group_ring(cyclic_group(2));
  const FusionRing z4 = group_ring(cyclic_group(4));
  const auto f = validate_morphism(z2, z4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  EXPECT_FALSE(is_dominant(f));
  EXPECT_THROW(induced_algebra(f), NotDominant);
  EXPECT_FALSE(exact_sequence_certificate(f).certified);
}

TEST(Morphism, PrimeBranchNeedsWeakIntegrality) {
  const FusionRing p = product_ring(builtin_ring("fibonacci"), group_ring(cyclic_group(2)));
  const auto f = validate_morphism(p, builtin_ring("fibonacci"), {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
  ClassificationRequest req;
  req.require_prime_branch = true;
  EXPECT_THROW(small_index_classification(f, req), NonIntegerGlobalDim);
}

TEST(Morphism, QuotientsAgreeWithOracleNormalSubgroups) {
  for (const char* name : {"D4", "Q8", "Z2xZ4", "A4"}) {
    const auto g = named_group(name);
    for (const auto& n : oracle::brute_force_normal_subgroups(g)) {
      const auto f = quotient_morphism(g, n);
      EXPECT_NEAR(fp_index(f), static_cast<double>(n.size()), 1e-12) << name;
      EXPECT_EQ(kernel_subring(f).indices(), n) << name;
      EXPECT_TRUE(is_normal(f).normal) << name;
      EXPECT_TRUE(exact_sequence_certificate(f).certified) << name;
    }
  }
}

TEST(Morphism, PrimeBranchCoversIndexTwo) {
  ClassificationRequest req;
  req.require_prime_branch = true;
  const auto r = small_index_classification(builtin_morphism("z4_to_z2"), req);
  EXPECT_EQ(r.kind, IndexClassification::EquivariantizationZp);
  EXPECT_EQ(r.prime, 2);
}
