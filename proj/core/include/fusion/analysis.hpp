#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusion/dimensions.hpp"
#include "fusion/exact.hpp"
#include "fusion/morphism.hpp"
#include "fusion/ring.hpp"
#include "fusion/subrings.hpp"

namespace fusion {

/// FPdim(ring) / FPdim(subring).
struct SubringIndex {
  double value = 0.0;
  /// Present when both dimensions are exact integers.
  std::optional<exact::Rational> exact;
  std::string note;

  bool exact_integer() const noexcept { return exact && exact->is_integer(); }
};

SubringIndex subcategory_index(const Subring& d, const DimensionData& ring_dims);
SubringIndex subcategory_index(const Subring& d, const DimensionOptions& options = {});

enum class ObstructionRule {
  /// Weakly integral ring, quotient dimension not an integer.
  R1,
  /// Quotient dimension prime, ring not integral.
  R2,
  /// Ring not integral, quotient dimension 1 or prime.
  R3,
};

std::string_view to_string(ObstructionRule rule);

struct Obstruction {
  ObstructionRule rule = ObstructionRule::R1;
  std::vector<Index> subring;
  double quotient_dim = 0.0;
  std::optional<exact::Rational> exact_quotient;
  std::string explanation;
};

/// Dimension-arithmetic reasons why `d` cannot be the kernel of an exact
/// sequence. An empty result means no obstruction was found, not that `d`
/// is normal. Rules only fire on exactly decided quantities. Throws
/// std::invalid_argument unless `d` is proper and nontrivial.
std::vector<Obstruction> normality_obstructions(const Subring& d, const DimensionData& ring_dims);
std::vector<Obstruction> normality_obstructions(const Subring& d, const DimensionOptions& options = {});

/// The ring is certainly not integral: some d_i is far from every integer,
/// or some exactly known d_i^2 is not a perfect square.
bool certainly_non_integral(const DimensionData& dims);

enum class SimplicityStatus { SimpleCertified, NotSimple, Inconclusive };

std::string_view to_string(SimplicityStatus status);

struct CandidateTrail {
  Subring subring;
  SubringIndex quotient;
  std::vector<Obstruction> obstructions;
};

struct WitnessOutcome {
  std::string name;
  bool source_matches = false;
  bool certified = false;
  std::vector<Index> kernel;
  bool kernel_proper_nontrivial = false;
  /// Certified, proper nontrivial kernel, and that kernel is unobstructed.
  bool accepted = false;
  std::string reason;
};

struct SimplicityVerdict {
  SimplicityStatus status = SimplicityStatus::Inconclusive;
  /// Proper nontrivial subrings in lexicographic order.
  std::vector<CandidateTrail> candidates;
  std::vector<WitnessOutcome> witnesses;
  /// Position in `witnesses` of the morphism proving NotSimple.
  std::optional<std::size_t> witness;
  double tolerance = kDefaultTolerance;

  std::vector<Subring> unobstructed() const;
};

struct AnalysisOptions {
  DimensionOptions dims;
  std::size_t max_rank = kDefaultMaxRank;
};

/// SimpleCertified when every proper nontrivial subring carries an
/// obstruction; NotSimple when a witness yields a certified exact sequence
/// with an unobstructed proper nontrivial kernel; Inconclusive otherwise.
SimplicityVerdict simplicity_check(const FusionRing& ring, const std::vector<RingMorphism>& witnesses = {},
                                   const AnalysisOptions& options = {});

struct TambaraYamagamiReport {
  std::size_t gamma_order = 0;
  std::string gamma_structure;
  Index x = 0;
  double x_dim = 0.0;
  bool x_dim_exact = false;
  SubringIndex pointed_index;
  bool gamma_is_square = false;
  bool gamma_is_prime = false;
  std::vector<Obstruction> pointed_obstructions;
  bool pointed_not_normal = false;
  SimplicityVerdict simplicity;
};

/// Throws NotTambaraYamagami unless exactly one simple X is non-invertible
/// and X·X is supported on invertibles.
TambaraYamagamiReport ty_report(const FusionRing& ring, const AnalysisOptions& options = {});

}  // namespace fusion
