#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

/// Finite group given by its multiplication table. Elements are 0..order-1.
/// The constructor checks closure, associativity, identity and inverses and
/// throws InvalidGroupTable on failure.
class GroupTable {
 public:
  GroupTable(std::vector<std::vector<Index>> mult, Index identity,
             std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  Index identity() const noexcept { return identity_; }
  Index multiply(Index a, Index b) const { return mult_[a * order_ + b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Index a) const { return labels_.at(a); }

  std::vector<std::vector<Index>> table() const;

  bool is_abelian() const;
  std::size_t element_order(Index a) const;

  bool is_subgroup(std::span<const Index> subset) const;
  bool is_normal_subgroup(std::span<const Index> subset) const;

  /// Quotient by a normal subgroup. Cosets are numbered by their smallest
  /// element; `coset_of[g]` receives the coset of each element. Throws
  /// NotNormalSubgroup.
  GroupTable quotient(std::span<const Index> normal_subgroup,
                      std::vector<Index>* coset_of = nullptr) const;

  /// Elementary divisors of an abelian group, e.g. {2, 2} or {4, 3}.
  /// Empty for the trivial group. Throws NonAbelianGroup.
  std::vector<std::size_t> abelian_invariants() const;

  /// "Z2xZ2", "Z4", "Z2xZ3", "1" for abelian groups; otherwise
  /// "nonabelian(n)".
  std::string structure() const;

  GroupTable relabeled(std::vector<std::string> labels) const;

 private:
  std::size_t order_;
  Index identity_;
  std::vector<Index> mult_;
  std::vector<Index> inverse_;
  std::vector<std::string> labels_;
};

GroupTable cyclic_group(std::size_t n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
/// Dihedral group of order 2n, n >= 1.
GroupTable dihedral_group(std::size_t n);
GroupTable quaternion_group();
GroupTable symmetric_group(std::size_t n);
GroupTable alternating_group(std::size_t n);

/// Closure of a set of permutations of {0..degree-1} under composition.
/// (p*q)(x) = p(q(x)).
GroupTable group_from_permutations(const std::vector<std::vector<Index>>& generators);

/// Resolves names such as "Z6", "V4", "Z2xZ4", "Z2^3", "S3", "D4", "Q8",
/// "A4". Orders are limited to 64. Throws UnknownName.
GroupTable named_group(std::string_view name);

/// Named groups of order <= max_order known to the catalog, one per
/// isomorphism class listed.
std::vector<std::string> catalog_group_names(std::size_t max_order = 64);

}  // namespace fusion
