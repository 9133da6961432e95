#include <cmath>

#include <gtest/gtest.h>

#include "fusion/fusion.hpp"
#include "fusion/io.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {

bool has_rule(const std::vector<Obstruction>& obs, ObstructionRule r) {
  for (const auto& o : obs)
    if (o.rule == r) return true;
  return false;
}

}  // namespace

TEST(Analysis, FibonacciGlobalDimensionIsNotAnInteger) {
  const double g = fp_dimensions(builtin_ring("fibonacci")).global;
  EXPECT_NEAR(g * g - 5.0 * g + 5.0, 0.0, 1e-9);
  EXPECT_NEAR(g, oracle::fibonacci_global_dim(), 1e-12);
  // x^2 - 5x + 5 has discriminant 5, not a square: no rational root.
  EXPECT_FALSE(exact::is_perfect_square(25 - 20));
}

TEST(Analysis, TyPrimeIndexTwoObstructed) {
  for (std::size_t q : {3, 5, 7}) {
    const FusionRing ty = tambara_yamagami(cyclic_group(q));
    const Subring pt = pointed_part(ty);
    const auto idx = subcategory_index(pt);
    ASSERT_TRUE(idx.exact_integer());
    EXPECT_EQ(idx.exact->num, 2);
    const auto obs = normality_obstructions(pt);
    EXPECT_TRUE(has_rule(obs, ObstructionRule::R2));
    EXPECT_TRUE(has_rule(obs, ObstructionRule::R3));
    EXPECT_FALSE(has_rule(obs, ObstructionRule::R1));
  }
}

TEST(Analysis, SquareOrderHasNoObstruction) {
  for (const char* g : {"Z4", "V4", "Z9", "Z3xZ3"}) {
    const FusionRing ty = tambara_yamagami(named_group(g));
    EXPECT_TRUE(normality_obstructions(pointed_part(ty)).empty()) << g;
  }
}

TEST(Analysis, IsingPointedPart) {
  const FusionRing ising = builtin_ring("ising");
  const auto obs = normality_obstructions(Subring(ising, {0, 1}));
  EXPECT_FALSE(has_rule(obs, ObstructionRule::R1));
  EXPECT_TRUE(has_rule(obs, ObstructionRule::R2));
  EXPECT_TRUE(has_rule(obs, ObstructionRule::R3));
}

TEST(Analysis, PrimeQuotientInProduct) {
  // TY(Z2) x Z[Z3] over TY(Z2) x 1: 12 / 4.
  const FusionRing p = product_ring(tambara_yamagami(cyclic_group(2)), group_ring(cyclic_group(3)));
  const Subring s(p, {0, 3, 6});
  const auto q = subcategory_index(s);
  ASSERT_TRUE(q.exact);
  EXPECT_EQ(q.exact->to_string(), "3");
  const auto obs = normality_obstructions(s);
  EXPECT_TRUE(has_rule(obs, ObstructionRule::R2));
}

TEST(Analysis, NonIntegerQuotientTriggersR1) {
  // Integral, dims (1, 1, 2, 3); {1, a} has FPdim 2 in 15.
  const FusionRing r = io::load_ring_file(FUSION_TEST_DATA "/ring15.json");
  const Subring s(r, {0, 1});
  const auto q = subcategory_index(s);
  ASSERT_TRUE(q.exact);
  EXPECT_EQ(q.exact->to_string(), "15/2");
  const auto obs = normality_obstructions(s);
  ASSERT_EQ(obs.size(), 1u);
  EXPECT_EQ(obs.front().rule, ObstructionRule::R1);
  EXPECT_EQ(simplicity_check(r).status, SimplicityStatus::SimpleCertified);
}

TEST(Analysis, R1MatchesNonIntegerQuotientsOnTyFamily) {
  for (std::size_t n = 2; n <= 9; ++n) {
    const FusionRing ty = tambara_yamagami(cyclic_group(n));
    for (const auto& s : enumerate_subrings(ty)) {
      if (!s.is_proper_nontrivial()) continue;
      const auto q = subcategory_index(s);
      const bool weak = fp_dimensions(ty).weak_integrality == WeakIntegrality::Exact;
      EXPECT_EQ(has_rule(normality_obstructions(s), ObstructionRule::R1),
                weak && q.exact && !q.exact->is_integer())
          << n;
    }
  }
}

TEST(Analysis, ObstructionsNeedProperSubring) {
  const FusionRing r = builtin_ring("rep_S3");
  EXPECT_THROW(normality_obstructions(Subring(r, {0})), std::invalid_argument);
  EXPECT_THROW(normality_obstructions(Subring(r, {0, 1, 2})), std::invalid_argument);
}

TEST(Analysis, TySimplicity) {
  for (std::size_t q : {3, 5, 7, 11, 13}) {
    const auto v = simplicity_check(tambara_yamagami(cyclic_group(q)));
    EXPECT_EQ(v.status, SimplicityStatus::SimpleCertified) << q;
    ASSERT_EQ(v.candidates.size(), 1u);
  }
}

TEST(Analysis, FibonacciVacuouslySimple) {
  const auto v = simplicity_check(builtin_ring("fibonacci"));
  EXPECT_EQ(v.status, SimplicityStatus::SimpleCertified);
  EXPECT_TRUE(v.candidates.empty());
}

TEST(Analysis, WitnessProvesNotSimple) {
  const auto f = builtin_morphism("z4_to_z2");
  const auto v = simplicity_check(f.source(), {f});
  EXPECT_EQ(v.status, SimplicityStatus::NotSimple);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(v.witnesses[*v.witness].accepted);
  EXPECT_EQ(simplicity_check(f.source()).status, SimplicityStatus::Inconclusive);
}

TEST(Analysis, ForeignWitnessIgnored) {
  const auto f = builtin_morphism("z4_to_z2");
  const auto v = simplicity_check(builtin_ring("rep_S3"), {f});
  EXPECT_EQ(v.status, SimplicityStatus::Inconclusive);
  EXPECT_FALSE(v.witnesses.front().source_matches);
}

TEST(Analysis, SimpleCertifiedIsMonotoneInWitnesses) {
  const FusionRing ty = tambara_yamagami(cyclic_group(5));
  const auto w = identity_morphism(ty);
  EXPECT_EQ(simplicity_check(ty, {w, w}).status, SimplicityStatus::SimpleCertified);
}

TEST(Analysis, TyReport) {
  const auto r = ty_report(tambara_yamagami(cyclic_group(6)));
  EXPECT_EQ(r.gamma_order, 6u);
  EXPECT_NEAR(r.x_dim, std::sqrt(6.0), 1e-9);
  EXPECT_TRUE(r.x_dim_exact);
  EXPECT_FALSE(r.gamma_is_square);
  EXPECT_TRUE(r.pointed_not_normal);
  ASSERT_TRUE(r.pointed_index.exact_integer());
  EXPECT_EQ(r.pointed_index.exact->num, 2);

  const auto sq = ty_report(tambara_yamagami(named_group("Z2xZ2")));
  EXPECT_TRUE(sq.gamma_is_square);
  EXPECT_FALSE(sq.pointed_not_normal);
  EXPECT_EQ(sq.simplicity.status, SimplicityStatus::Inconclusive);

  EXPECT_THROW(ty_report(builtin_ring("rep_S3")), NotTambaraYamagami);
}
