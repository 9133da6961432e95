#include "fusion/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fusion/error.hpp"

namespace fusion {

SubringIndex subcategory_index(const Subring& d, const DimensionData& ring_dims) {
  SubringIndex out;
  double sub = 0.0;
  for (Index i : d.indices()) sub += ring_dims[i] * ring_dims[i];
  out.value = ring_dims.global / sub;

  if (ring_dims.squared_dims && ring_dims.exact_global) {
    std::int64_t exact_sub = 0;
    for (Index i : d.indices()) exact_sub = exact::checked_add(exact_sub, (*ring_dims.squared_dims)[i]);
    out.exact = exact::Rational::of(*ring_dims.exact_global, exact_sub);
    out.note = out.exact->is_integer() ? "exact integer" : "exact rational, not an integer";
  } else {
    out.note = "algebraic integer; value known numerically only";
  }
  return out;
}

SubringIndex subcategory_index(const Subring& d, const DimensionOptions& options) {
  return subcategory_index(d, fp_dimensions(d.ring(), options));
}

std::string_view to_string(ObstructionRule rule) {
  switch (rule) {
    case ObstructionRule::R1: return "R1";
    case ObstructionRule::R2: return "R2";
    case ObstructionRule::R3: return "R3";
  }
  return "R1";
}

bool certainly_non_integral(const DimensionData& dims) {
  if (dims.integral) return false;
  for (double d : dims.per_simple)
    if (!exact::snap_to_integer(d, kSnapTolerance)) return true;
  if (dims.squared_dims)
    for (auto n : *dims.squared_dims)
      if (!exact::is_perfect_square(n)) return true;
  return false;
}

std::vector<Obstruction> normality_obstructions(const Subring& d, const DimensionData& ring_dims) {
  if (!d.is_proper_nontrivial())
    throw std::invalid_argument("normality obstructions need a proper nontrivial subring");
  const SubringIndex q = subcategory_index(d, ring_dims);
  const bool non_integral = certainly_non_integral(ring_dims);
  const bool q_prime = q.exact_integer() && exact::is_prime(q.exact->num);
  const bool q_one = q.exact_integer() && q.exact->num == 1;

  std::vector<Obstruction> out;
  auto emit = [&](ObstructionRule rule, std::string explanation) {
    out.push_back(Obstruction{rule, d.indices(), q.value, q.exact, std::move(explanation)});
  };

  if (ring_dims.weak_integrality == WeakIntegrality::Exact && q.exact && !q.exact->is_integer()) {
    emit(ObstructionRule::R1, "ring is weakly integral (FPdim " + std::to_string(*ring_dims.exact_global) +
                                  ") but the quotient dimension " + q.exact->to_string() +
                                  " is not an integer; a weakly integral extension has an integral quotient");
  }
  if (q_prime && non_integral) {
    emit(ObstructionRule::R2, "quotient dimension " + q.exact->to_string() +
                                  " is prime, so a normal subring would force the ring to be integral, "
                                  "but the ring is not integral");
  }
  if (non_integral && (q_one || q_prime)) {
    emit(ObstructionRule::R3, "ring is not integral, so a quotient admits no quasi-fiber functor and its "
                              "dimension cannot be 1 or a prime; here it is " + q.exact->to_string());
  }
  return out;
}

std::vector<Obstruction> normality_obstructions(const Subring& d, const DimensionOptions& options) {
  return normality_obstructions(d, fp_dimensions(d.ring(), options));
}

std::string_view to_string(SimplicityStatus status) {
  switch (status) {
    case SimplicityStatus::SimpleCertified: return "SimpleCertified";
    case SimplicityStatus::NotSimple: return "NotSimple";
    case SimplicityStatus::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::vector<Subring> SimplicityVerdict::unobstructed() const {
  std::vector<Subring> out;
  for (const auto& c : candidates)
    if (c.obstructions.empty()) out.push_back(c.subring);
  return out;
}

SimplicityVerdict simplicity_check(const FusionRing& ring, const std::vector<RingMorphism>& witnesses,
                                   const AnalysisOptions& options) {
  const auto subrings = enumerate_subrings(ring, options.max_rank);
  const DimensionData dims = fp_dimensions(ring, options.dims);

  SimplicityVerdict v;
  v.tolerance = options.dims.tolerance;
  for (const auto& s : subrings) {
    if (!s.is_proper_nontrivial()) continue;
    v.candidates.push_back(CandidateTrail{s, subcategory_index(s, dims), normality_obstructions(s, dims)});
  }
  const bool all_obstructed = std::all_of(v.candidates.begin(), v.candidates.end(),
                                          [](const CandidateTrail& c) { return !c.obstructions.empty(); });

  for (const auto& w : witnesses) {
    WitnessOutcome o;
    o.name = w.name();
    o.source_matches = w.source().same_structure(ring);
    if (!o.source_matches) {
      o.reason = "witness source is not this ring";
      v.witnesses.push_back(std::move(o));
      continue;
    }
    const ExactSequenceCertificate c = exact_sequence_certificate(w);
    o.certified = c.certified;
    o.kernel = c.kernel.indices();
    o.kernel_proper_nontrivial = c.kernel.is_proper_nontrivial();
    if (!o.certified) {
      o.reason = "exact-sequence certificate fails";
    } else if (!o.kernel_proper_nontrivial) {
      o.reason = "kernel is trivial or the whole ring";
    } else {
      const auto it = std::find_if(v.candidates.begin(), v.candidates.end(),
                                   [&](const CandidateTrail& t) { return t.subring == c.kernel; });
      if (it != v.candidates.end() && !it->obstructions.empty()) {
        o.reason = "counterexample candidate: certified at ring level but the kernel carries rule " +
                   std::string(to_string(it->obstructions.front().rule));
      } else {
        o.accepted = true;
        o.reason = "certified exact sequence with proper nontrivial kernel";
      }
    }
    v.witnesses.push_back(std::move(o));
  }

  if (all_obstructed) {
    v.status = SimplicityStatus::SimpleCertified;
  } else {
    for (std::size_t n = 0; n < v.witnesses.size(); ++n) {
      if (v.witnesses[n].accepted) {
        v.status = SimplicityStatus::NotSimple;
        v.witness = n;
        break;
      }
    }
    if (!v.witness) v.status = SimplicityStatus::Inconclusive;
  }
  return v;
}

TambaraYamagamiReport ty_report(const FusionRing& ring, const AnalysisOptions& options) {
  std::vector<Index> non_invertible;
  for (Index i = 0; i < ring.rank(); ++i)
    if (!is_invertible(ring, i)) non_invertible.push_back(i);
  if (non_invertible.size() != 1)
    throw NotTambaraYamagami("expected exactly one non-invertible simple, found " +
                             std::to_string(non_invertible.size()));
  const Index x = non_invertible.front();
  for (const auto& t : ring.product(x, x))
    if (!is_invertible(ring, t.simple))
      throw NotTambaraYamagami("X·X contains the non-invertible simple " + ring.label(t.simple));

  const DimensionData dims = fp_dimensions(ring, options.dims);
  const PicardGroup pic = picard_group(ring);
  const Subring pointed = pointed_part(ring);

  TambaraYamagamiReport r;
  r.gamma_order = pic.order();
  r.gamma_structure = pic.table.structure();
  r.x = x;
  r.x_dim = dims[x];
  r.x_dim_exact = dims.squared_dims && (*dims.squared_dims)[x] == static_cast<std::int64_t>(r.gamma_order);
  r.pointed_index = subcategory_index(pointed, dims);
  r.gamma_is_square = exact::is_perfect_square(static_cast<std::int64_t>(r.gamma_order));
  r.gamma_is_prime = exact::is_prime(static_cast<std::int64_t>(r.gamma_order));
  if (pointed.is_proper_nontrivial()) r.pointed_obstructions = normality_obstructions(pointed, dims);
  r.pointed_not_normal = !r.pointed_obstructions.empty();
  r.simplicity = simplicity_check(ring, {}, options);
  return r;
}

}  // namespace fusion
