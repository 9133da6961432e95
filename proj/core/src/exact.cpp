#include "fusion/exact.hpp"

#include <algorithm>
#include <cmath>
#include <vector>
#include <numeric>
#include <stdexcept>

#include "fusion/error.hpp"
#include "fusion/ring.hpp"

namespace fusion::exact {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt of negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  const auto r = isqrt(n);
  return r * r == n;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  return smallest_prime_factor(n) == n;
}

std::int64_t smallest_prime_factor(std::int64_t n) {
  if (n < 2) throw std::domain_error("smallest_prime_factor needs n >= 2");
  if (n % 2 == 0) return 2;
  for (std::int64_t p = 3; p <= n / p; p += 2)
    if (n % p == 0) return p;
  return n;
}

Surd simplify_sqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("square root of negative number");
  if (n == 0) return {0, 1};
  Surd s{1, 1};
  std::int64_t rest = n;
  for (std::int64_t p = 2; p <= rest / p; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      s.outside *= p;
    }
  }
  s.radicand = rest;
  return s;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("integer overflow in exact arithmetic");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error("integer overflow in exact arithmetic");
  return out;
}

void SurdSum::add(Surd term, std::int64_t times) {
  if (term.outside == 0 || times == 0) return;
  auto& c = terms_[term.radicand];
  c = checked_add(c, checked_mul(term.outside, times));
  if (c == 0) terms_.erase(term.radicand);
}

Surd multiply(Surd a, Surd b) {
  const std::int64_t g = std::gcd(a.radicand, b.radicand);
  // s t = g^2 (s/g)(t/g), and (s/g)(t/g) is squarefree when s, t are.
  return {checked_mul(checked_mul(a.outside, b.outside), g),
          checked_mul(a.radicand / g, b.radicand / g)};
}

bool verify_sqrt_dimensions(const FusionRing& ring, std::span<const std::int64_t> squared_dims) {
  const std::size_t n = ring.rank();
  if (squared_dims.size() != n) throw std::invalid_argument("squared dimension vector length mismatch");
  std::vector<Surd> d;
  d.reserve(n);
  for (auto v : squared_dims) {
    if (v <= 0) return false;
    d.push_back(simplify_sqrt(v));
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      SurdSum lhs, rhs;
      lhs.add(multiply(d[i], d[j]));
      for (const auto& t : ring.product(i, j)) rhs.add(d[t.simple], t.multiplicity);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool verify_integer_dimensions(const FusionRing& ring, std::span<const std::int64_t> dims) {
  const std::size_t n = ring.rank();
  if (dims.size() != n) throw std::invalid_argument("dimension vector length mismatch");
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      std::int64_t rhs = 0;
      for (const auto& t : ring.product(i, j)) rhs = checked_add(rhs, checked_mul(t.multiplicity, dims[t.simple]));
      if (checked_mul(dims[i], dims[j]) != rhs) return false;
    }
  }
  return true;
}

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

struct Frac {
  std::int64_t n = 0;
  std::int64_t d = 1;
};

Frac reduce(std::int64_t n, std::int64_t d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  return g > 1 ? Frac{n / g, d / g} : Frac{n, d};
}

Frac sub_mul(Frac a, Frac b, Frac c) {  // a - b*c
  const Frac bc = reduce(checked_mul(b.n, c.n), checked_mul(b.d, c.d));
  return reduce(checked_add(checked_mul(a.n, bc.d), -checked_mul(bc.n, a.d)), checked_mul(a.d, bc.d));
}

}  // namespace

bool has_positive_eigenvector(std::span<const std::int64_t> matrix, std::size_t n, std::int64_t lambda) {
  if (matrix.size() != n * n) throw std::invalid_argument("matrix size mismatch");
  std::vector<std::vector<Frac>> b(n, std::vector<Frac>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) b[r][c] = {matrix[r * n + c] - (r == c ? lambda : 0), 1};

  std::vector<std::size_t> pivots;
  try {
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
      std::size_t p = row;
      while (p < n && b[p][col].n == 0) ++p;
      if (p == n) continue;
      std::swap(b[p], b[row]);
      const Frac inv = reduce(b[row][col].d, b[row][col].n);
      for (auto& x : b[row]) x = reduce(checked_mul(x.n, inv.n), checked_mul(x.d, inv.d));
      for (std::size_t r = 0; r < n; ++r) {
        if (r == row || b[r][col].n == 0) continue;
        const Frac factor = b[r][col];
        for (std::size_t c = 0; c < n; ++c) b[r][c] = sub_mul(b[r][c], factor, b[row][c]);
      }
      pivots.push_back(col);
      ++row;
    }
  } catch (const Error&) {
    return false;
  }
  if (n - pivots.size() != 1) return false;

  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  // x_free = 1, x_pivot = -b[r][free]; all must share one strict sign.
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (b[r][free_col].n >= 0) return false;
  return true;
}

std::optional<std::int64_t> snap_to_integer(double x, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  const double r = std::round(x);
  if (std::fabs(x - r) < tol && std::fabs(r) < 9.0e15) return static_cast<std::int64_t>(r);
  return std::nullopt;
}

}  // namespace fusion::exact
