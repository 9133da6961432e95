#include "fusion/dimensions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fusion/error.hpp"
#include "fusion/exact.hpp"

namespace fusion {

std::string_view to_string(WeakIntegrality w) {
  switch (w) {
    case WeakIntegrality::No: return "no";
    case WeakIntegrality::NumericOnly: return "numeric-only";
    case WeakIntegrality::Exact: return "exact";
  }
  return "no";
}

bool approx_equal(double a, double b, double tol) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

namespace {

// M_{jk} = sum_i N_{ij}^k, so (M d)_j = (sum_i d_i) d_j for the FP vector.
std::vector<double> perron_matrix(const FusionRing& ring) {
  const std::size_t n = ring.rank();
  std::vector<double> m(n * n, 0.0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& t : ring.product(i, j)) m[j * n + t.simple] += static_cast<double>(t.multiplicity);
  return m;
}

double homomorphism_residual(const FusionRing& ring, const std::vector<double>& d) {
  double worst = 0.0;
  for (Index i = 0; i < ring.rank(); ++i) {
    for (Index j = 0; j < ring.rank(); ++j) {
      double rhs = 0.0;
      for (const auto& t : ring.product(i, j)) rhs += static_cast<double>(t.multiplicity) * d[t.simple];
      const double lhs = d[i] * d[j];
      worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, lhs));
    }
  }
  return worst;
}

void classify_integrality(const FusionRing& ring, const DimensionOptions& options, DimensionData& out) {
  const std::size_t n = ring.rank();

  std::vector<std::int64_t> ints;
  for (double d : out.per_simple) {
    auto r = exact::snap_to_integer(d, options.snap_tolerance);
    if (!r) break;
    ints.push_back(*r);
  }
  if (ints.size() == n && exact::verify_integer_dimensions(ring, ints)) {
    out.integral = true;
    std::vector<std::int64_t> squares;
    std::int64_t total = 0;
    for (auto v : ints) {
      squares.push_back(exact::checked_mul(v, v));
      total = exact::checked_add(total, squares.back());
    }
    out.integer_dims = std::move(ints);
    out.squared_dims = std::move(squares);
    out.exact_global = total;
    out.weakly_integral = true;
    out.weak_integrality = WeakIntegrality::Exact;
    return;
  }

  std::vector<std::int64_t> squares;
  for (double d : out.per_simple) {
    auto r = exact::snap_to_integer(d * d, options.snap_tolerance * std::max(1.0, d * d));
    if (!r) break;
    squares.push_back(*r);
  }
  if (squares.size() == n && exact::verify_sqrt_dimensions(ring, squares)) {
    std::int64_t total = 0;
    for (auto v : squares) total = exact::checked_add(total, v);
    out.squared_dims = std::move(squares);
    out.exact_global = total;
    out.weakly_integral = true;
    out.weak_integrality = WeakIntegrality::Exact;
    return;
  }

  if (exact::snap_to_integer(out.global, options.snap_tolerance * std::max(1.0, out.global))) {
    out.weakly_integral = true;
    out.weak_integrality = WeakIntegrality::NumericOnly;
  }
}

}  // namespace

DimensionData fp_dimensions(const FusionRing& ring, const DimensionOptions& options) {
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t n = ring.rank();
  const Index u = ring.unit();
  const auto m = perron_matrix(ring);

  DimensionData out;
  out.tolerance = options.tolerance;

  std::vector<double> x(n, 1.0), y(n);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::size_t iter = 0;
  bool stalled = false;
  while (iter < options.max_iterations) {
    ++iter;
    for (Index j = 0; j < n; ++j) {
      double s = 0.0;
      for (Index k = 0; k < n; ++k) s += m[j * n + k] * x[k];
      y[j] = s;
    }
    const double scale = y[u];
    if (!(scale > 0.0) || !std::isfinite(scale))
      throw NonConvergence("power iteration degenerated (unit component " + std::to_string(scale) + ")");
    double diff = 0.0, top = 0.0;
    for (Index j = 0; j < n; ++j) {
      y[j] /= scale;
      diff = std::max(diff, std::fabs(y[j] - x[j]));
      top = std::max(top, std::fabs(y[j]));
    }
    x.swap(y);
    if (diff <= 8.0 * eps * top) {
      stalled = true;
      break;
    }
  }

  out.per_simple = x;
  out.iterations = iter;
  out.residual = homomorphism_residual(ring, x);
  if (out.residual > options.tolerance) {
    std::ostringstream os;
    os << "FP dimension iteration " << (stalled ? "stalled" : "hit the iteration cap") << " after "
       << iter << " steps with homomorphism residual " << out.residual << " > tolerance "
       << options.tolerance << " (degenerate or disconnected input?)";
    throw NonConvergence(os.str());
  }
  for (Index i = 0; i < n; ++i) {
    if (x[i] < 1.0 - options.tolerance)
      throw NonConvergence("FP dimension of simple " + std::to_string(i) + " is below 1");
  }

  out.global = 0.0;
  for (double d : x) out.global += d * d;
  classify_integrality(ring, options, out);
  return out;
}

double fpdim(const ObjectVector& v, const DimensionData& dims) { return v.fpdim(dims.per_simple); }

std::optional<std::int64_t> exact_fpdim(const ObjectVector& v, const DimensionData& dims) {
  if (!dims.integer_dims) return std::nullopt;
  std::int64_t total = 0;
  for (Index i = 0; i < v.size(); ++i)
    total = exact::checked_add(total, exact::checked_mul(v[i], (*dims.integer_dims)[i]));
  return total;
}

std::optional<std::int64_t> exact_integer_dimension(const FusionRing& ring, const DimensionData& dims, Index i) {
  if (dims.integer_dims) return (*dims.integer_dims)[i];
  if (dims.squared_dims) {
    const auto sq = (*dims.squared_dims)[i];
    if (!exact::is_perfect_square(sq)) return std::nullopt;
    return exact::isqrt(sq);
  }
  const auto self_dual = ring.product(i, ring.dual(i));
  if (self_dual.size() == 1 && self_dual.front().simple == ring.unit() && self_dual.front().multiplicity == 1)
    return 1;

  const auto m = exact::snap_to_integer(dims[i], kSnapTolerance);
  if (!m || *m < 1) return std::nullopt;
  const std::size_t n = ring.rank();
  std::vector<std::int64_t> mat(n * n, 0);
  for (Index j = 0; j < n; ++j)
    for (const auto& t : ring.product(i, j)) mat[j * n + t.simple] = t.multiplicity;
  if (exact::has_positive_eigenvector(mat, n, *m)) return *m;
  return std::nullopt;
}

}  // namespace fusion
