#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fusion {

/// Position of a simple object in a ring's basis.
using Index = std::size_t;

/// Nonnegative integer multiplicity (structure constant or coefficient).
using Multiplicity = std::int64_t;

/// One summand k with multiplicity N_{ij}^k of a product of simples.
struct FusionTerm {
  Index simple = 0;
  Multiplicity multiplicity = 0;

  friend bool operator==(const FusionTerm&, const FusionTerm&) = default;
};

/// Unvalidated description of a fusion ring, as read from a file or built
/// by a constructor. Entries absent from `constants` are zero.
struct RawRing {
  struct Entry {
    Index i = 0;
    Index j = 0;
    Index k = 0;
    Multiplicity value = 0;
  };

  std::string name;
  std::size_t rank = 0;
  std::vector<std::string> labels;
  Index unit = 0;
  std::vector<Index> dual;
  std::vector<Entry> constants;
};

class FusionRing;

namespace detail {
struct RingData;
}

/// Checks structure and every fusion-ring axiom, returning the immutable
/// ring. Throws ParseError for structural problems and one of the
/// RingValidationError subclasses (carrying the offending tuple) for axiom
/// failures. Checks run in the order unit, duality, Frobenius symmetry,
/// associativity.
FusionRing validate_ring(const RawRing& raw);

/// Immutable, validated fusion ring. Copies share storage.
///
/// Structure constants are stored sparsely: for each ordered pair (i, j)
/// the nonzero terms of X_i X_j sorted by simple index.
class FusionRing {
 public:
  const std::string& name() const noexcept;
  std::size_t rank() const noexcept;
  const std::vector<std::string>& labels() const noexcept;
  const std::string& label(Index i) const;
  std::optional<Index> find(std::string_view label) const;

  Index unit() const noexcept;
  Index dual(Index i) const;
  const std::vector<Index>& duals() const noexcept;

  /// N_{ij}^k.
  Multiplicity coefficient(Index i, Index j, Index k) const;

  /// Nonzero terms of X_i X_j, ascending by simple index.
  std::span<const FusionTerm> product(Index i, Index j) const;

  /// Left multiplication matrix L_i with (L_i)_{kj} = N_{ij}^k, row-major.
  std::vector<Multiplicity> fusion_matrix(Index i) const;

  /// Same structure with a different name and/or labels.
  FusionRing relabeled(std::string name, std::vector<std::string> labels) const;
  FusionRing renamed(std::string name) const;

  RawRing to_raw() const;

  /// Equal rank, unit, duals and structure constants; names and labels are
  /// ignored.
  bool same_structure(const FusionRing& other) const;

  /// Same underlying storage (cheap identity test).
  bool shares_storage(const FusionRing& other) const noexcept { return data_ == other.data_; }

 private:
  explicit FusionRing(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::RingData> data_;

  friend FusionRing validate_ring(const RawRing& raw);
};

/// Searches for a basis bijection (fixing the unit) carrying the structure
/// constants of `a` onto those of `b`. Backtracking with invariant pruning;
/// intended for small ranks.
std::optional<std::vector<Index>> find_isomorphism(const FusionRing& a, const FusionRing& b);

inline bool isomorphic(const FusionRing& a, const FusionRing& b) {
  return find_isomorphism(a, b).has_value();
}

/// Nonnegative integer combination of simples; coefficient i is m_{X_i}(Y).
class ObjectVector {
 public:
  ObjectVector(FusionRing ring, std::vector<Multiplicity> coeffs);

  static ObjectVector zero(const FusionRing& ring);
  static ObjectVector unit(const FusionRing& ring);
  static ObjectVector simple(const FusionRing& ring, Index i);

  const FusionRing& ring() const noexcept { return ring_; }
  std::span<const Multiplicity> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Multiplicity multiplicity(Index i) const { return coeffs_.at(i); }
  Multiplicity operator[](Index i) const { return coeffs_[i]; }

  std::vector<Index> support() const;
  bool is_zero() const;
  /// Supported only on the unit (the object is "trivial").
  bool is_unit_multiple() const;

  ObjectVector dual() const;
  double fpdim(std::span<const double> dims) const;

  ObjectVector& operator+=(const ObjectVector& other);
  friend ObjectVector operator+(ObjectVector a, const ObjectVector& b) { return a += b; }
  friend ObjectVector operator*(const ObjectVector& a, const ObjectVector& b);
  friend ObjectVector operator*(Multiplicity scalar, ObjectVector v);

  friend bool operator==(const ObjectVector& a, const ObjectVector& b);

 private:
  FusionRing ring_;
  std::vector<Multiplicity> coeffs_;
};

/// Index set of a fusion subring: contains the unit, closed under duals and
/// under product supports.
class Subring {
 public:
  /// Throws std::invalid_argument if `indices` is not a subring of `ring`.
  Subring(FusionRing ring, std::vector<Index> indices);

  const FusionRing& ring() const noexcept { return ring_; }
  const std::vector<Index>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool contains(Index i) const;

  bool is_trivial() const noexcept { return indices_.size() == 1; }
  bool is_full() const noexcept { return indices_.size() == ring_.rank(); }
  bool is_proper_nontrivial() const noexcept { return !is_trivial() && !is_full(); }

  friend bool operator==(const Subring& a, const Subring& b) { return a.indices_ == b.indices_; }
  friend std::strong_ordering operator<=>(const Subring& a, const Subring& b) {
    return a.indices_ <=> b.indices_;
  }

 private:
  FusionRing ring_;
  std::vector<Index> indices_;
};

/// The fusion ring on the sub-basis of `s`, with inherited constants.
FusionRing restrict_to_subring(const Subring& s);

/// Ring-level Deligne product: basis of pairs (a, b) ordered a-major,
/// constants multiply componentwise. Throws RankBoundExceeded when
/// rank(r1) * rank(r2) > max_rank.
FusionRing product_ring(const FusionRing& r1, const FusionRing& r2, std::size_t max_rank = 256);

}  // namespace fusion
