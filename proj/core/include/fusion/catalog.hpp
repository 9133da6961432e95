#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusion/group.hpp"
#include "fusion/morphism.hpp"
#include "fusion/ring.hpp"

namespace fusion {

/// Fusion ring of Γ-graded vector spaces: basis = group elements,
/// X_g X_h = X_{gh}, dual = inverse.
FusionRing group_ring(const GroupTable& g, std::string name = {});

/// Tambara-Yamagami fusion ring over an abelian group: basis Γ ∪ {X},
/// gX = Xg = X, X X = Σ_g g, X self-dual. Throws NonAbelianGroup.
FusionRing tambara_yamagami(const GroupTable& g, std::string name = {});

/// "fibonacci", "rep_S3", "trivial", "ising". Throws UnknownName.
FusionRing builtin_ring(std::string_view name);
std::vector<std::string> builtin_ring_names();

/// "z4_to_z2", "repS3_res_Z3", "repS3_res_Z2", "ty4_to_z2". Throws
/// UnknownName.
RingMorphism builtin_morphism(std::string_view name, const MorphismOptions& options = {});
std::vector<std::string> builtin_morphism_names();

/// Z[G] -> Z[G/N], X_g -> X_{gN}. Throws NotNormalSubgroup.
RingMorphism quotient_morphism(const GroupTable& g, std::span<const Index> normal_subgroup,
                               const MorphismOptions& options = {});

}  // namespace fusion
