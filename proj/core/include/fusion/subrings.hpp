#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fusion/group.hpp"
#include "fusion/ring.hpp"

namespace fusion {

inline constexpr std::size_t kDefaultMaxRank = 24;

/// X_i X_{i*} = 1, decided in integers. Equivalent to N_i N_{i*} = I since
/// left multiplication is a representation and only the unit acts as I.
bool is_invertible(const FusionRing& ring, Index i);

/// Invertible simples with their group law. `table` is indexed by position
/// in `elements`; the identity is the position of the unit.
struct PicardGroup {
  std::vector<Index> elements;
  GroupTable table;

  std::size_t order() const noexcept { return elements.size(); }
};

PicardGroup picard_group(const FusionRing& ring);

/// Least subring containing `seed`: closure of seed and the unit under
/// duals and product supports.
Subring generated_subring(const FusionRing& ring, std::span<const Index> seed);

/// Subring generated by all invertible simples.
Subring pointed_part(const FusionRing& ring);

/// Every subring, sorted lexicographically by index set. Built from the
/// principal subrings <X_i> by repeated joins; every subring is the join of
/// the principal subrings of its elements. Throws RankBoundExceeded when
/// rank > max_rank.
std::vector<Subring> enumerate_subrings(const FusionRing& ring, std::size_t max_rank = kDefaultMaxRank);

}  // namespace fusion
