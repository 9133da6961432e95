#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusion/dimensions.hpp"
#include "fusion/group.hpp"
#include "fusion/ring.hpp"

namespace fusion {

/// Every morphism-level verdict checks only conditions a tensor functor
/// must satisfy on Grothendieck rings. Reports carry this text verbatim.
inline constexpr std::string_view kRingLevelQualifier =
    "ring-level certificate: necessary conditions only; sound for refutation, "
    "evidence-level for confirmation";

struct MorphismOptions {
  DimensionOptions dims;
};

/// Decategorified dominant tensor functor candidate: a unital,
/// multiplicative, dual-compatible, dimension-preserving map on simples.
/// Immutable; carries the FP data of both rings.
class RingMorphism {
 public:
  const std::string& name() const noexcept { return name_; }
  const FusionRing& source() const noexcept { return source_; }
  const FusionRing& target() const noexcept { return target_; }
  const ObjectVector& image(Index i) const { return images_.at(i); }
  const std::vector<ObjectVector>& images() const noexcept { return images_; }
  const DimensionData& source_dims() const noexcept { return source_dims_; }
  const DimensionData& target_dims() const noexcept { return target_dims_; }
  double tolerance() const noexcept { return source_dims_.tolerance; }

  /// Rows of image coefficients, one per source simple.
  std::vector<std::vector<Multiplicity>> image_rows() const;

 private:
  RingMorphism(std::string name, FusionRing source, FusionRing target, std::vector<ObjectVector> images,
               DimensionData source_dims, DimensionData target_dims);

  std::string name_;
  FusionRing source_;
  FusionRing target_;
  std::vector<ObjectVector> images_;
  DimensionData source_dims_;
  DimensionData target_dims_;

  friend RingMorphism validate_morphism(FusionRing, FusionRing, std::vector<std::vector<Multiplicity>>,
                                        const MorphismOptions&, std::string);
};

/// Checks, in order: shapes (ParseError), unit image, dimension
/// preservation, dual compatibility, multiplicativity. Throws the
/// matching MorphismValidationError subclass on the first failure.
RingMorphism validate_morphism(FusionRing source, FusionRing target,
                               std::vector<std::vector<Multiplicity>> images,
                               const MorphismOptions& options = {}, std::string name = {});

RingMorphism identity_morphism(const FusionRing& ring, const MorphismOptions& options = {});

/// Every target simple occurs in some F(X_i).
bool is_dominant(const RingMorphism& f);

/// A with m_{X_i}(A) = m_1(F(X_i)).
struct InducedAlgebra {
  ObjectVector vector;
  double fpdim = 0.0;
  /// Present when the source is integral.
  std::optional<std::int64_t> exact_fpdim;
};

InducedAlgebra induced_algebra(const RingMorphism& f);

/// FPdim(source) / FPdim(target). Throws IndexAlgebraMismatch when this
/// differs from FPdim of the induced algebra.
double fp_index(const RingMorphism& f);

struct NormalityEvidence {
  Index simple = 0;
  std::string label;
  Multiplicity multiplicity = 0;
  double dimension = 0.0;
  bool dimension_integral = false;
  bool ok = false;
};

struct NormalityResult {
  bool normal = false;
  /// Ordered by simple index.
  std::vector<NormalityEvidence> evidence;
  /// Independent route: support(A) inside the kernel.
  bool support_in_kernel = false;
  bool criteria_agree() const noexcept { return normal == support_in_kernel; }
  /// First simple violating m in {0, d}.
  std::optional<Index> first_failure;
};

/// m_X(A) in {0, FPdim X} for every simple X. The nonzero branch needs d_X
/// to pass exact integrality; a non-integral d_X with m > 0 is a failure.
NormalityResult is_normal(const RingMorphism& f);

/// Simples whose image is a multiple of the target unit. Throws
/// KernelNotClosed if that set is not a subring.
Subring kernel_subring(const RingMorphism& f);

struct ExactSequenceCertificate {
  std::string morphism;
  bool dominant = false;
  bool normal = false;
  Subring kernel;
  std::optional<double> index{};
  double kernel_fpdim = 0.0;
  double quotient_fpdim = 0.0;
  double total_fpdim = 0.0;
  std::optional<std::int64_t> exact_kernel_fpdim{};
  std::optional<std::int64_t> exact_quotient_fpdim{};
  std::optional<std::int64_t> exact_total_fpdim{};
  bool multiplicativity_ok = false;
  /// Decided in integers when all three dimensions are exact.
  bool multiplicativity_exact = false;
  bool source_weakly_integral = false;
  bool target_weakly_integral = false;
  bool weak_integrality_transfer_ok = false;
  bool certified = false;
  double tolerance = kDefaultTolerance;
  std::vector<std::string> notes{};
  std::string qualifier{kRingLevelQualifier};

  /// "8 = 4·2" style summary of the multiplicativity check.
  std::string multiplicativity_summary() const;
};

/// Never throws on failed checks; reasons go to `notes`.
ExactSequenceCertificate exact_sequence_certificate(const RingMorphism& f);

struct SumOfInvertiblesReport {
  bool applicable = false;
  /// Set when not applicable.
  std::optional<Index> first_non_invertible;
  /// Support of A, ascending.
  std::vector<Index> gamma;
  std::optional<GroupTable> gamma_table;
  std::string gamma_structure;
  bool multiplicities_one = false;
  bool is_group = false;
  bool normal = false;
  bool kernel_equals_generated = false;
  bool kernel_pointed = false;
  std::vector<std::string> notes;

  bool holds() const noexcept {
    return applicable && multiplicities_one && is_group && normal && kernel_equals_generated && kernel_pointed;
  }
};

SumOfInvertiblesReport sum_of_invertibles_analysis(const RingMorphism& f);

enum class IndexClassification {
  EquivariantizationZ2,
  EquivariantizationZp,
  NoClaim,
  /// A hypothesis held but a predicted consequence failed.
  CounterexampleCandidate,
};

std::string_view to_string(IndexClassification c);

struct ClassificationCheck {
  std::string name;
  bool passed = false;
};

struct SmallIndexReport {
  double index = 0.0;
  std::optional<std::int64_t> integer_index;
  bool index_exact = false;
  IndexClassification kind = IndexClassification::NoClaim;
  std::optional<std::int64_t> prime;
  std::string label;
  std::vector<ClassificationCheck> checks;
  std::vector<std::string> notes;
  bool observed_normal = false;
  std::string qualifier{kRingLevelQualifier};
};

struct ClassificationRequest {
  /// Insist on the smallest-prime branch; throws NonIntegerGlobalDim for a
  /// source that is not weakly integral.
  bool require_prime_branch = false;
};

/// Index 2: expects A = 1 + S with S invertible, F normal, kernel Z[Z2].
/// Index p = smallest prime factor of an exactly integral FPdim(source):
/// expects A a sum of p invertibles forming Z_p, F normal, kernel Z[Z_p].
/// Anything else is NoClaim.
SmallIndexReport small_index_classification(const RingMorphism& f, const ClassificationRequest& request = {});

}  // namespace fusion
