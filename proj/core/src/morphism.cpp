#include "fusion/morphism.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fusion/catalog.hpp"
#include "fusion/error.hpp"
#include "fusion/exact.hpp"
#include "fusion/subrings.hpp"

namespace fusion {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::string describe(const ObjectVector& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (v[i] != 1) out += std::to_string(v[i]);
    out += v.ring().label(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

RingMorphism::RingMorphism(std::string name, FusionRing source, FusionRing target,
                           std::vector<ObjectVector> images, DimensionData source_dims,
                           DimensionData target_dims)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      source_dims_(std::move(source_dims)),
      target_dims_(std::move(target_dims)) {}

std::vector<std::vector<Multiplicity>> RingMorphism::image_rows() const {
  std::vector<std::vector<Multiplicity>> rows;
  for (const auto& v : images_) rows.emplace_back(v.coeffs().begin(), v.coeffs().end());
  return rows;
}

RingMorphism validate_morphism(FusionRing source, FusionRing target,
                               std::vector<std::vector<Multiplicity>> rows, const MorphismOptions& options,
                               std::string name) {
  if (rows.size() != source.rank())
    throw ParseError("morphism has " + str(rows.size()) + " image rows, source rank is " + str(source.rank()));
  std::vector<ObjectVector> images;
  for (Index i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != target.rank())
      throw ParseError("image row " + str(i) + " has length " + str(rows[i].size()) + ", target rank is " +
                       str(target.rank()));
    for (auto c : rows[i])
      if (c < 0) throw ParseError("negative image coefficient in row " + str(i));
    images.emplace_back(target, std::move(rows[i]));
  }

  if (!(images[source.unit()] == ObjectVector::unit(target)))
    throw UnitImageViolation("F(" + source.label(source.unit()) + ") = " + describe(images[source.unit()]) +
                             ", expected the target unit");

  DimensionData sd = fp_dimensions(source, options.dims);
  DimensionData td = fp_dimensions(target, options.dims);
  const double tol = options.dims.tolerance;

  for (Index i = 0; i < source.rank(); ++i) {
    const double got = fpdim(images[i], td);
    if (!approx_equal(got, sd[i], tol))
      throw DimensionMismatch(i, "FPdim F(" + source.label(i) + ") = " + format_number(got) + " but FPdim " +
                                     source.label(i) + " = " + format_number(sd[i]));
  }

  for (Index i = 0; i < source.rank(); ++i) {
    if (!(images[source.dual(i)] == images[i].dual()))
      throw DualCompatViolation(i, "F(" + source.label(source.dual(i)) + ") = " +
                                       describe(images[source.dual(i)]) + " is not the dual of F(" +
                                       source.label(i) + ") = " + describe(images[i]));
  }

  for (Index i = 0; i < source.rank(); ++i) {
    for (Index j = 0; j < source.rank(); ++j) {
      ObjectVector lhs = ObjectVector::zero(target);
      for (const auto& t : source.product(i, j)) lhs += t.multiplicity * images[t.simple];
      const ObjectVector rhs = images[i] * images[j];
      if (!(lhs == rhs))
        throw MultiplicativityViolation(i, j, "F(" + source.label(i) + " " + source.label(j) + ") = " +
                                                  describe(lhs) + " but F(" + source.label(i) + ") F(" +
                                                  source.label(j) + ") = " + describe(rhs));
    }
  }

  if (name.empty()) name = source.name() + " -> " + target.name();
  return RingMorphism(std::move(name), std::move(source), std::move(target), std::move(images), std::move(sd),
                      std::move(td));
}

RingMorphism identity_morphism(const FusionRing& ring, const MorphismOptions& options) {
  std::vector<std::vector<Multiplicity>> rows(ring.rank(), std::vector<Multiplicity>(ring.rank(), 0));
  for (Index i = 0; i < ring.rank(); ++i) rows[i][i] = 1;
  return validate_morphism(ring, ring, std::move(rows), options, "id(" + ring.name() + ")");
}

bool is_dominant(const RingMorphism& f) {
  std::vector<char> hit(f.target().rank(), 0);
  for (const auto& v : f.images())
    for (Index k : v.support()) hit[k] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

namespace {

void require_dominant(const RingMorphism& f) {
  if (!is_dominant(f)) throw NotDominant("morphism '" + f.name() + "' is not dominant");
}

}  // namespace

InducedAlgebra induced_algebra(const RingMorphism& f) {
  require_dominant(f);
  const Index u = f.target().unit();
  std::vector<Multiplicity> coeffs;
  for (const auto& v : f.images()) coeffs.push_back(v[u]);
  ObjectVector a(f.source(), std::move(coeffs));
  const double dim = fpdim(a, f.source_dims());
  auto exact = exact_fpdim(a, f.source_dims());
  return InducedAlgebra{std::move(a), dim, exact};
}

double fp_index(const RingMorphism& f) {
  const InducedAlgebra a = induced_algebra(f);
  const double index = f.source_dims().global / f.target_dims().global;
  if (!approx_equal(index, a.fpdim, f.tolerance()))
    throw IndexAlgebraMismatch("FPdim(source)/FPdim(target) = " + format_number(index) +
                               " but FPdim(A) = " + format_number(a.fpdim));
  return index;
}

NormalityResult is_normal(const RingMorphism& f) {
  const InducedAlgebra a = induced_algebra(f);
  const auto& sd = f.source_dims();
  NormalityResult out;
  out.normal = true;
  for (Index i = 0; i < f.source().rank(); ++i) {
    NormalityEvidence e;
    e.simple = i;
    e.label = f.source().label(i);
    e.multiplicity = a.vector[i];
    e.dimension = sd[i];
    const std::optional<std::int64_t> exact_d = exact_integer_dimension(f.source(), sd, i);
    e.dimension_integral = exact_d.has_value();
    e.ok = e.multiplicity == 0 || (exact_d && e.multiplicity == *exact_d);
    if (!e.ok) {
      out.normal = false;
      if (!out.first_failure) out.first_failure = i;
    }
    out.evidence.push_back(std::move(e));
  }

  const Subring kernel = kernel_subring(f);
  out.support_in_kernel = true;
  for (Index i : a.vector.support())
    if (!kernel.contains(i)) out.support_in_kernel = false;
  return out;
}

Subring kernel_subring(const RingMorphism& f) {
  std::vector<Index> members;
  for (Index i = 0; i < f.source().rank(); ++i)
    if (f.image(i).is_unit_multiple()) members.push_back(i);
  const Subring closure = generated_subring(f.source(), members);
  if (closure.indices() != members)
    throw KernelNotClosed("kernel of '" + f.name() + "' is not closed under the fusion product");
  return closure;
}

std::string ExactSequenceCertificate::multiplicativity_summary() const {
  auto fmt = [](std::optional<std::int64_t> exact, double v) {
    return exact ? std::to_string(*exact) : format_number(v);
  };
  const std::string lhs = fmt(exact_total_fpdim, total_fpdim);
  const std::string rhs = fmt(exact_kernel_fpdim, kernel_fpdim) + "·" + fmt(exact_quotient_fpdim, quotient_fpdim);
  return lhs + (multiplicativity_ok ? " = " : " ≠ ") + rhs;
}

ExactSequenceCertificate exact_sequence_certificate(const RingMorphism& f) {
  ExactSequenceCertificate c{.morphism = f.name(), .kernel = kernel_subring(f)};
  const auto& sd = f.source_dims();
  const auto& td = f.target_dims();
  c.tolerance = f.tolerance();

  c.dominant = is_dominant(f);
  if (c.dominant) {
    const NormalityResult n = is_normal(f);
    c.normal = n.normal;
    if (!n.normal && n.first_failure) {
      const auto& e = n.evidence[*n.first_failure];
      c.notes.push_back("not normal: m_" + e.label + "(A) = " + std::to_string(e.multiplicity) +
                        " is neither 0 nor FPdim " + e.label + " = " + format_number(e.dimension));
    }
    try {
      c.index = fp_index(f);
    } catch (const IndexAlgebraMismatch& ex) {
      c.notes.push_back(ex.what());
    }
  } else {
    c.notes.push_back("not dominant: some target simple never occurs in an image");
  }

  c.total_fpdim = sd.global;
  c.quotient_fpdim = td.global;
  c.kernel_fpdim = 0.0;
  for (Index i : c.kernel.indices()) c.kernel_fpdim += sd[i] * sd[i];
  c.exact_total_fpdim = sd.exact_global;
  c.exact_quotient_fpdim = td.exact_global;
  if (sd.squared_dims) {
    std::int64_t k = 0;
    for (Index i : c.kernel.indices()) k = exact::checked_add(k, (*sd.squared_dims)[i]);
    c.exact_kernel_fpdim = k;
  }

  if (c.exact_total_fpdim && c.exact_kernel_fpdim && c.exact_quotient_fpdim) {
    c.multiplicativity_exact = true;
    c.multiplicativity_ok = *c.exact_total_fpdim == exact::checked_mul(*c.exact_kernel_fpdim, *c.exact_quotient_fpdim);
  } else {
    c.multiplicativity_ok = approx_equal(c.total_fpdim, c.kernel_fpdim * c.quotient_fpdim, c.tolerance);
  }
  if (!c.multiplicativity_ok)
    c.notes.push_back("FPdim multiplicativity fails: " + c.multiplicativity_summary());

  c.source_weakly_integral = sd.weakly_integral;
  c.target_weakly_integral = td.weakly_integral;
  c.weak_integrality_transfer_ok = c.source_weakly_integral == c.target_weakly_integral;
  if (!c.weak_integrality_transfer_ok)
    c.notes.push_back(std::string("weak integrality does not transfer: source ") +
                      (c.source_weakly_integral ? "is" : "is not") + " weakly integral, target " +
                      (c.target_weakly_integral ? "is" : "is not"));
  if (sd.weak_integrality == WeakIntegrality::NumericOnly || td.weak_integrality == WeakIntegrality::NumericOnly)
    c.notes.push_back("weak integrality decided numerically only");

  c.certified = c.dominant && c.normal && c.multiplicativity_ok && c.weak_integrality_transfer_ok;
  return c;
}

SumOfInvertiblesReport sum_of_invertibles_analysis(const RingMorphism& f) {
  const InducedAlgebra a = induced_algebra(f);
  const FusionRing& src = f.source();
  SumOfInvertiblesReport r;
  r.gamma = a.vector.support();
  for (Index i : r.gamma) {
    if (!is_invertible(src, i)) {
      r.first_non_invertible = i;
      r.notes.push_back("not applicable: " + src.label(i) + " lies in the support of A and is not invertible");
      return r;
    }
  }
  r.applicable = true;

  r.multiplicities_one = std::all_of(r.gamma.begin(), r.gamma.end(), [&](Index i) { return a.vector[i] == 1; });
  if (!r.multiplicities_one) r.notes.push_back("some invertible summand of A has multiplicity other than 1");

  std::vector<Index> position(src.rank(), src.rank());
  for (Index p = 0; p < r.gamma.size(); ++p) position[r.gamma[p]] = p;
  r.is_group = true;
  std::vector<std::vector<Index>> mult(r.gamma.size(), std::vector<Index>(r.gamma.size()));
  for (Index p = 0; p < r.gamma.size() && r.is_group; ++p) {
    for (Index q = 0; q < r.gamma.size(); ++q) {
      const auto terms = src.product(r.gamma[p], r.gamma[q]);
      if (terms.size() != 1 || position[terms[0].simple] == src.rank()) {
        r.is_group = false;
        r.notes.push_back("support of A is not closed under the fusion product");
        break;
      }
      mult[p][q] = position[terms[0].simple];
    }
  }
  if (r.is_group) {
    std::vector<std::string> labels;
    for (Index i : r.gamma) labels.push_back(src.label(i));
    try {
      r.gamma_table.emplace(std::move(mult), position[src.unit()], std::move(labels));
      r.gamma_structure = r.gamma_table->structure();
    } catch (const InvalidGroupTable& ex) {
      r.is_group = false;
      r.notes.push_back(std::string("support of A is not a group: ") + ex.what());
    }
  }

  r.normal = is_normal(f).normal;
  if (!r.normal) r.notes.push_back("morphism is not normal");
  const Subring kernel = kernel_subring(f);
  const Subring generated = generated_subring(src, r.gamma);
  r.kernel_equals_generated = kernel == generated;
  if (!r.kernel_equals_generated) r.notes.push_back("kernel differs from the subring generated by the support of A");
  r.kernel_pointed = std::all_of(kernel.indices().begin(), kernel.indices().end(),
                                 [&](Index i) { return is_invertible(src, i); });
  if (!r.kernel_pointed) r.notes.push_back("kernel is not pointed");
  return r;
}

std::string_view to_string(IndexClassification c) {
  switch (c) {
    case IndexClassification::EquivariantizationZ2: return "equivariantization-type-Z2";
    case IndexClassification::EquivariantizationZp: return "equivariantization-type-Zp";
    case IndexClassification::NoClaim: return "no-claim";
    case IndexClassification::CounterexampleCandidate: return "counterexample-candidate";
  }
  return "no-claim";
}

namespace {

// Checks shared by both branches: A is a sum of p distinct invertibles
// forming Z_p, F is normal, and the kernel is Z[Z_p].
void check_cyclic_kernel(const RingMorphism& f, std::int64_t p, SmallIndexReport& out) {
  const InducedAlgebra a = induced_algebra(f);
  const FusionRing& src = f.source();
  const auto support = a.vector.support();
  const auto pz = static_cast<std::size_t>(p);

  const bool shape = support.size() == pz &&
                     std::all_of(support.begin(), support.end(), [&](Index i) { return a.vector[i] == 1; });
  const bool invertible =
      std::all_of(support.begin(), support.end(), [&](Index i) { return is_invertible(src, i); });
  const std::string what = p == 2 ? "A = 1 + S with multiplicity one" : "A is a sum of " + std::to_string(p) +
                                                                            " distinct simples";
  out.checks.push_back({what, shape});
  out.checks.push_back({p == 2 ? "S is invertible" : "every summand of A is invertible", invertible});

  const NormalityResult n = is_normal(f);
  out.observed_normal = n.normal;
  out.checks.push_back({"F is normal", n.normal});

  const Subring kernel = kernel_subring(f);
  out.checks.push_back({"kernel has rank " + std::to_string(p), kernel.size() == pz});
  const bool cyclic = kernel.size() == pz && isomorphic(restrict_to_subring(kernel), group_ring(cyclic_group(pz)));
  out.checks.push_back({"kernel is Z[Z" + std::to_string(p) + "]", cyclic});
}

}  // namespace

SmallIndexReport small_index_classification(const RingMorphism& f, const ClassificationRequest& request) {
  require_dominant(f);
  const auto& sd = f.source_dims();
  const auto& td = f.target_dims();
  SmallIndexReport out;
  out.index = fp_index(f);

  if (sd.exact_global && td.exact_global) {
    const auto q = exact::Rational::of(*sd.exact_global, *td.exact_global);
    out.index_exact = true;
    if (q.is_integer()) out.integer_index = q.num;
  } else if (auto snapped = exact::snap_to_integer(out.index, kSnapTolerance)) {
    out.integer_index = snapped;
    out.notes.push_back("index integrality decided numerically");
  }

  auto finish = [&out](IndexClassification success, std::string label) {
    const bool all = std::all_of(out.checks.begin(), out.checks.end(), [](const auto& c) { return c.passed; });
    out.kind = all ? success : IndexClassification::CounterexampleCandidate;
    out.label = all ? std::move(label)
                    : "counterexample candidate: hypotheses hold but a predicted consequence fails";
  };

  if (out.integer_index == 2 && !request.require_prime_branch) {
    out.prime = 2;
    check_cyclic_kernel(f, 2, out);
    finish(IndexClassification::EquivariantizationZ2, "equivariantization-type (Z2, ring level)");
    return out;
  }

  if (sd.weak_integrality != WeakIntegrality::Exact) {
    if (request.require_prime_branch)
      throw NonIntegerGlobalDim("smallest-prime branch needs an exactly integral FPdim(source); source weak "
                                "integrality is " + std::string(to_string(sd.weak_integrality)));
    out.notes.push_back("FPdim(source) is not an exactly verified integer; no smallest-prime claim");
    out.observed_normal = is_normal(f).normal;
    out.kind = IndexClassification::NoClaim;
    out.label = "no claim";
    return out;
  }

  const std::int64_t global = *sd.exact_global;
  const std::int64_t spf = global >= 2 ? exact::smallest_prime_factor(global) : 0;
  if (out.integer_index && out.index_exact && exact::is_prime(*out.integer_index) && *out.integer_index == spf) {
    const std::int64_t p = *out.integer_index;
    out.prime = p;
    check_cyclic_kernel(f, p, out);
    finish(IndexClassification::EquivariantizationZp,
           "equivariantization-type (Z" + std::to_string(p) + ", ring level)");
    return out;
  }

  std::ostringstream why;
  if (!out.integer_index) {
    why << "index " << format_number(out.index) << " is not an integer";
  } else if (!exact::is_prime(*out.integer_index)) {
    why << "index " << *out.integer_index << " is not prime";
  } else {
    why << "index " << *out.integer_index << " is not the smallest prime factor " << spf << " of FPdim " << global;
  }
  out.notes.push_back(why.str());
  out.observed_normal = is_normal(f).normal;
  out.notes.push_back(std::string("observed normal: ") + (out.observed_normal ? "true" : "false"));
  out.kind = IndexClassification::NoClaim;
  out.label = "no claim";
  return out;
}

}  // namespace fusion
