#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

namespace fusion {

class FusionRing;

namespace exact {

/// Floor of the square root; n >= 0.
std::int64_t isqrt(std::int64_t n);
bool is_perfect_square(std::int64_t n);

/// Trial division. Only meaningful on exactly verified integers.
bool is_prime(std::int64_t n);
/// Smallest prime factor of n >= 2; returns n itself when n is prime.
std::int64_t smallest_prime_factor(std::int64_t n);

/// n = outside^2 * radicand with radicand squarefree.
struct Surd {
  std::int64_t outside = 1;
  std::int64_t radicand = 1;
};
Surd simplify_sqrt(std::int64_t n);

/// Overflow-checked arithmetic; throws fusion::Error on overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// Integer linear combination of square roots of squarefree integers,
/// keyed by radicand. Square roots of distinct squarefree integers are
/// linearly independent over Q, so equality of two sums is equality of
/// their coefficient maps.
class SurdSum {
 public:
  void add(Surd term, std::int64_t times = 1);
  bool operator==(const SurdSum& other) const { return terms_ == other.terms_; }

  const std::map<std::int64_t, std::int64_t>& terms() const noexcept { return terms_; }

 private:
  std::map<std::int64_t, std::int64_t> terms_;
};

/// Product of a*sqrt(s) and b*sqrt(t) for squarefree s, t.
Surd multiply(Surd a, Surd b);

/// Exactly verifies that d_i = sqrt(squared_dims[i]) satisfies
/// d_i d_j = sum_k N_{ij}^k d_k for all i, j.
bool verify_sqrt_dimensions(const FusionRing& ring, std::span<const std::int64_t> squared_dims);

/// Exactly verifies d_i d_j = sum_k N_{ij}^k d_k for an integer vector.
bool verify_integer_dimensions(const FusionRing& ring, std::span<const std::int64_t> dims);

/// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  bool is_integer() const noexcept { return den == 1; }
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// True when the n x n integer matrix has a strictly positive rational
/// eigenvector for `lambda` spanning a one-dimensional eigenspace. For a
/// nonnegative matrix this pins lambda to the spectral radius. Overflow of
/// the rational elimination yields false.
bool has_positive_eigenvector(std::span<const std::int64_t> matrix, std::size_t n, std::int64_t lambda);

/// Nearest integer to x when |x - round(x)| < tol.
std::optional<std::int64_t> snap_to_integer(double x, double tol);

}  // namespace exact
}  // namespace fusion
