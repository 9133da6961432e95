#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kSnapTolerance = 1e-6;
inline constexpr std::size_t kDefaultMaxIterations = 1'000'000;

struct DimensionOptions {
  double tolerance = kDefaultTolerance;
  std::size_t max_iterations = kDefaultMaxIterations;
  /// Distance to the nearest integer below which a value is a candidate
  /// for exact re-verification.
  double snap_tolerance = kSnapTolerance;
};

enum class WeakIntegrality {
  No,           // global FPdim is not near an integer
  NumericOnly,  // near an integer, but no exact certificate was found
  Exact,        // d_i = sqrt(n_i) verified exactly; global = sum n_i
};

std::string_view to_string(WeakIntegrality w);

/// Frobenius-Perron data of a ring. `integral` and `weakly_integral` are
/// only set true after exact integer re-verification (weakly_integral is
/// also true in the NumericOnly case; check `weak_integrality` to tell).
struct DimensionData {
  std::vector<double> per_simple;
  double global = 0.0;
  double tolerance = kDefaultTolerance;
  bool integral = false;
  bool weakly_integral = false;
  WeakIntegrality weak_integrality = WeakIntegrality::No;

  /// d_i as integers, present iff integral.
  std::optional<std::vector<std::int64_t>> integer_dims;
  /// d_i^2 as integers, present iff weak_integrality == Exact.
  std::optional<std::vector<std::int64_t>> squared_dims;
  /// sum d_i^2, present iff weak_integrality == Exact.
  std::optional<std::int64_t> exact_global;

  std::size_t iterations = 0;
  /// max_{i,j} |d_i d_j - sum_k N_ij^k d_k| / max(1, d_i d_j)
  double residual = 0.0;

  double operator[](Index i) const { return per_simple[i]; }
  std::size_t size() const noexcept { return per_simple.size(); }
};

/// Perron eigenvector of M = sum_i N_i by power iteration, normalized so the
/// unit has dimension 1. Throws NonConvergence when the iteration budget is
/// spent without meeting the tolerance.
DimensionData fp_dimensions(const FusionRing& ring, const DimensionOptions& options = {});

/// FPdim of an object: sum_i m_i d_i.
double fpdim(const ObjectVector& v, const DimensionData& dims);

/// Exact FPdim of an object when all d_i are integers.
std::optional<std::int64_t> exact_fpdim(const ObjectVector& v, const DimensionData& dims);

/// d_i as an exactly verified integer, or nullopt when d_i is not an integer
/// or cannot be certified. Works without global integrality: invertible
/// simples are 1, and otherwise the snapped value m must admit a positive
/// eigenvector of the integer matrix (N_ij^k)_{jk} at eigenvalue m.
std::optional<std::int64_t> exact_integer_dimension(const FusionRing& ring, const DimensionData& dims, Index i);

/// |a - b| <= tol * max(1, |a|, |b|)
bool approx_equal(double a, double b, double tol);

}  // namespace fusion
