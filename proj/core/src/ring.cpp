#include "fusion/ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "fusion/error.hpp"

namespace fusion {

namespace detail {

struct RingData {
  std::string name;
  std::size_t rank = 0;
  std::vector<std::string> labels;
  Index unit = 0;
  std::vector<Index> dual;
  // products[i * rank + j] = nonzero terms of X_i X_j, sorted by simple.
  std::vector<std::vector<FusionTerm>> products;

  std::span<const FusionTerm> product(Index i, Index j) const { return products[i * rank + j]; }

  Multiplicity coefficient(Index i, Index j, Index k) const {
    const auto terms = product(i, j);
    const auto it = std::lower_bound(terms.begin(), terms.end(), k,
                                     [](const FusionTerm& t, Index key) { return t.simple < key; });
    return (it != terms.end() && it->simple == k) ? it->multiplicity : 0;
  }
};

}  // namespace detail

using detail::RingData;

namespace {

std::string str(Index i) { return std::to_string(i); }

void check_structure(const RawRing& raw) {
  const std::size_t n = raw.rank;
  if (n == 0) throw ParseError("rank must be positive");
  if (raw.labels.size() != n)
    throw ParseError("expected " + str(n) + " labels, got " + str(raw.labels.size()));
  std::set<std::string> seen;
  for (const auto& label : raw.labels) {
    if (label.empty()) throw ParseError("empty label");
    if (!seen.insert(label).second) throw ParseError("duplicate label '" + label + "'");
  }
  if (raw.unit >= n) throw ParseError("unit index " + str(raw.unit) + " out of range");
  if (raw.dual.size() != n)
    throw ParseError("expected " + str(n) + " dual entries, got " + str(raw.dual.size()));
  for (Index d : raw.dual)
    if (d >= n) throw ParseError("dual index " + str(d) + " out of range");

  std::set<std::tuple<Index, Index, Index>> triples;
  for (const auto& e : raw.constants) {
    if (e.i >= n || e.j >= n || e.k >= n)
      throw ParseError("structure constant index out of range at (" + str(e.i) + ", " + str(e.j) +
                       ", " + str(e.k) + ")");
    if (e.value < 0)
      throw ParseError("negative structure constant at (" + str(e.i) + ", " + str(e.j) + ", " +
                       str(e.k) + ")");
    if (!triples.emplace(e.i, e.j, e.k).second)
      throw ParseError("duplicate structure constant triple (" + str(e.i) + ", " + str(e.j) +
                       ", " + str(e.k) + ")");
  }
}

void check_unit(const RingData& d) {
  const Index u = d.unit;
  for (Index j = 0; j < d.rank; ++j) {
    for (Index k = 0; k < d.rank; ++k) {
      const Multiplicity expected = (j == k) ? 1 : 0;
      if (d.coefficient(u, j, k) != expected)
        throw UnitAxiomViolation({u, j, k}, "N_{unit," + str(j) + "}^" + str(k) + " = " +
                                                std::to_string(d.coefficient(u, j, k)) +
                                                ", expected " + std::to_string(expected));
      if (d.coefficient(j, u, k) != expected)
        throw UnitAxiomViolation({j, u, k}, "N_{" + str(j) + ",unit}^" + str(k) + " = " +
                                                std::to_string(d.coefficient(j, u, k)) +
                                                ", expected " + std::to_string(expected));
    }
  }
}

void check_duality(const RingData& d) {
  if (d.dual[d.unit] != d.unit)
    throw DualityViolation({d.unit}, "the unit must be self-dual");
  for (Index i = 0; i < d.rank; ++i)
    if (d.dual[d.dual[i]] != i)
      throw DualityViolation({i, d.dual[i]}, "dual is not an involution at " + str(i));
  for (Index i = 0; i < d.rank; ++i) {
    for (Index j = 0; j < d.rank; ++j) {
      const Multiplicity expected = (j == d.dual[i]) ? 1 : 0;
      const Multiplicity got = d.coefficient(i, j, d.unit);
      if (got != expected)
        throw DualityViolation({i, j, d.unit}, "N_{" + str(i) + "," + str(j) + "}^unit = " +
                                                   std::to_string(got) + ", expected " +
                                                   std::to_string(expected));
    }
  }
}

// Both maps (i,j,k) -> (j*,i*,k*) and (i,j,k) -> (k,j*,i) are involutions on
// triples, so checking them from every nonzero entry covers the zero ones.
void check_frobenius(const RingData& d) {
  const auto& dual = d.dual;
  for (Index i = 0; i < d.rank; ++i) {
    for (Index j = 0; j < d.rank; ++j) {
      for (const auto& t : d.product(i, j)) {
        const Index k = t.simple;
        if (d.coefficient(dual[j], dual[i], dual[k]) != t.multiplicity)
          throw FrobeniusSymmetryViolation(
              {i, j, k}, "N_{ij}^k != N_{j*i*}^{k*} (" + std::to_string(t.multiplicity) +
                             " vs " +
                             std::to_string(d.coefficient(dual[j], dual[i], dual[k])) + ")");
        if (d.coefficient(k, dual[j], i) != t.multiplicity)
          throw FrobeniusSymmetryViolation(
              {i, j, k}, "N_{ij}^k != N_{kj*}^i (" + std::to_string(t.multiplicity) + " vs " +
                             std::to_string(d.coefficient(k, dual[j], i)) + ")");
      }
    }
  }
}

void check_associativity(const RingData& d) {
  const std::size_t n = d.rank;
  std::vector<Multiplicity> left(n), right(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const auto ij = d.product(i, j);
      for (Index k = 0; k < n; ++k) {
        std::fill(left.begin(), left.end(), 0);
        std::fill(right.begin(), right.end(), 0);
        for (const auto& m : ij)
          for (const auto& t : d.product(m.simple, k)) left[t.simple] += m.multiplicity * t.multiplicity;
        for (const auto& m : d.product(j, k))
          for (const auto& t : d.product(i, m.simple)) right[t.simple] += m.multiplicity * t.multiplicity;
        for (Index l = 0; l < n; ++l)
          if (left[l] != right[l])
            throw AssociativityViolation(
                {i, j, k, l}, "((X_i X_j) X_k) has " + std::to_string(left[l]) +
                                  " copies of X_l, (X_i (X_j X_k)) has " + std::to_string(right[l]));
      }
    }
  }
}

}  // namespace

FusionRing validate_ring(const RawRing& raw) {
  check_structure(raw);

  auto data = std::make_shared<RingData>();
  data->name = raw.name;
  data->rank = raw.rank;
  data->labels = raw.labels;
  data->unit = raw.unit;
  data->dual = raw.dual;
  data->products.resize(raw.rank * raw.rank);
  for (const auto& e : raw.constants)
    if (e.value != 0) data->products[e.i * raw.rank + e.j].push_back({e.k, e.value});
  for (auto& terms : data->products)
    std::sort(terms.begin(), terms.end(),
              [](const FusionTerm& a, const FusionTerm& b) { return a.simple < b.simple; });

  check_unit(*data);
  check_duality(*data);
  check_frobenius(*data);
  check_associativity(*data);

  return FusionRing(std::move(data));
}

const std::string& FusionRing::name() const noexcept { return data_->name; }
std::size_t FusionRing::rank() const noexcept { return data_->rank; }
const std::vector<std::string>& FusionRing::labels() const noexcept { return data_->labels; }
const std::string& FusionRing::label(Index i) const { return data_->labels.at(i); }

std::optional<Index> FusionRing::find(std::string_view label) const {
  const auto& labels = data_->labels;
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Index>(it - labels.begin());
}

Index FusionRing::unit() const noexcept { return data_->unit; }
Index FusionRing::dual(Index i) const { return data_->dual.at(i); }
const std::vector<Index>& FusionRing::duals() const noexcept { return data_->dual; }

Multiplicity FusionRing::coefficient(Index i, Index j, Index k) const {
  if (i >= rank() || j >= rank() || k >= rank()) throw std::out_of_range("simple index out of range");
  return data_->coefficient(i, j, k);
}

std::span<const FusionTerm> FusionRing::product(Index i, Index j) const {
  if (i >= rank() || j >= rank()) throw std::out_of_range("simple index out of range");
  return data_->product(i, j);
}

std::vector<Multiplicity> FusionRing::fusion_matrix(Index i) const {
  const std::size_t n = rank();
  std::vector<Multiplicity> m(n * n, 0);
  for (Index j = 0; j < n; ++j)
    for (const auto& t : product(i, j)) m[t.simple * n + j] = t.multiplicity;
  return m;
}

FusionRing FusionRing::relabeled(std::string name, std::vector<std::string> labels) const {
  RawRing raw = to_raw();
  raw.name = std::move(name);
  raw.labels = std::move(labels);
  return validate_ring(raw);
}

FusionRing FusionRing::renamed(std::string name) const {
  auto data = std::make_shared<RingData>(*data_);
  data->name = std::move(name);
  return FusionRing(std::move(data));
}

RawRing FusionRing::to_raw() const {
  RawRing raw;
  raw.name = name();
  raw.rank = rank();
  raw.labels = labels();
  raw.unit = unit();
  raw.dual = duals();
  for (Index i = 0; i < rank(); ++i)
    for (Index j = 0; j < rank(); ++j)
      for (const auto& t : product(i, j)) raw.constants.push_back({i, j, t.simple, t.multiplicity});
  return raw;
}

bool FusionRing::same_structure(const FusionRing& other) const {
  if (shares_storage(other)) return true;
  return rank() == other.rank() && unit() == other.unit() && duals() == other.duals() &&
         data_->products == other.data_->products;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

struct Signature {
  bool self_dual = false;
  std::vector<Multiplicity> square;      // sorted multiplicities of X_i X_i
  std::vector<Multiplicity> with_dual;   // sorted multiplicities of X_i X_i*
  Multiplicity row_total = 0;            // sum_{j,k} N_ij^k

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const FusionRing& r, Index i) {
  Signature s;
  s.self_dual = r.dual(i) == i;
  for (const auto& t : r.product(i, i)) s.square.push_back(t.multiplicity);
  for (const auto& t : r.product(i, r.dual(i))) s.with_dual.push_back(t.multiplicity);
  std::sort(s.square.begin(), s.square.end());
  std::sort(s.with_dual.begin(), s.with_dual.end());
  for (Index j = 0; j < r.rank(); ++j)
    for (const auto& t : r.product(i, j)) s.row_total += t.multiplicity;
  return s;
}

class IsoSearch {
 public:
  IsoSearch(const FusionRing& a, const FusionRing& b) : a_(a), b_(b), n_(a.rank()) {
    for (Index i = 0; i < n_; ++i) {
      sig_a_.push_back(signature(a, i));
      sig_b_.push_back(signature(b, i));
    }
    map_.assign(n_, npos);
    used_.assign(n_, false);
    // Unit first, the rest in index order.
    order_.push_back(a.unit());
    for (Index i = 0; i < n_; ++i)
      if (i != a.unit()) order_.push_back(i);
  }

  std::optional<std::vector<Index>> run() {
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Index npos = static_cast<Index>(-1);

  bool consistent(Index x) const {
    const Index px = map_[x];
    const Index dx = a_.dual(x);
    if (map_[dx] != npos && map_[dx] != b_.dual(px)) return false;
    for (Index y = 0; y < n_; ++y) {
      if (map_[y] == npos) continue;
      for (Index z = 0; z < n_; ++z) {
        if (map_[z] == npos) continue;
        if (a_.coefficient(x, y, z) != b_.coefficient(px, map_[y], map_[z])) return false;
        if (a_.coefficient(y, x, z) != b_.coefficient(map_[y], px, map_[z])) return false;
        if (a_.coefficient(y, z, x) != b_.coefficient(map_[y], map_[z], px)) return false;
      }
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == n_) return true;
    const Index x = order_[depth];
    for (Index cand = 0; cand < n_; ++cand) {
      if (used_[cand]) continue;
      if (depth == 0 && cand != b_.unit()) continue;
      if (!(sig_a_[x] == sig_b_[cand])) continue;
      map_[x] = cand;
      used_[cand] = true;
      if (consistent(x) && search(depth + 1)) return true;
      used_[cand] = false;
      map_[x] = npos;
    }
    return false;
  }

  const FusionRing& a_;
  const FusionRing& b_;
  std::size_t n_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<Index> order_;
  std::vector<Index> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Index>> find_isomorphism(const FusionRing& a, const FusionRing& b) {
  if (a.rank() != b.rank()) return std::nullopt;
  return IsoSearch(a, b).run();
}

// ---------------------------------------------------------------------------
// ObjectVector

ObjectVector::ObjectVector(FusionRing ring, std::vector<Multiplicity> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_.rank())
    throw std::invalid_argument("object vector has " + str(coeffs_.size()) +
                                " coefficients, ring rank is " + str(ring_.rank()));
  for (Multiplicity c : coeffs_)
    if (c < 0) throw std::invalid_argument("object vector coefficients must be nonnegative");
}

ObjectVector ObjectVector::zero(const FusionRing& ring) {
  return ObjectVector(ring, std::vector<Multiplicity>(ring.rank(), 0));
}

ObjectVector ObjectVector::unit(const FusionRing& ring) { return simple(ring, ring.unit()); }

ObjectVector ObjectVector::simple(const FusionRing& ring, Index i) {
  std::vector<Multiplicity> c(ring.rank(), 0);
  c.at(i) = 1;
  return ObjectVector(ring, std::move(c));
}

std::vector<Index> ObjectVector::support() const {
  std::vector<Index> s;
  for (Index i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) s.push_back(i);
  return s;
}

bool ObjectVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Multiplicity c) { return c == 0; });
}

bool ObjectVector::is_unit_multiple() const {
  for (Index i = 0; i < coeffs_.size(); ++i)
    if (i != ring_.unit() && coeffs_[i] != 0) return false;
  return true;
}

ObjectVector ObjectVector::dual() const {
  std::vector<Multiplicity> c(coeffs_.size(), 0);
  for (Index i = 0; i < coeffs_.size(); ++i) c[ring_.dual(i)] = coeffs_[i];
  return ObjectVector(ring_, std::move(c));
}

double ObjectVector::fpdim(std::span<const double> dims) const {
  if (dims.size() != coeffs_.size()) throw std::invalid_argument("dimension vector length mismatch");
  double total = 0.0;
  for (Index i = 0; i < coeffs_.size(); ++i) total += static_cast<double>(coeffs_[i]) * dims[i];
  return total;
}

ObjectVector& ObjectVector::operator+=(const ObjectVector& other) {
  if (other.coeffs_.size() != coeffs_.size())
    throw std::invalid_argument("adding object vectors over different rings");
  for (Index i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ObjectVector operator*(const ObjectVector& a, const ObjectVector& b) {
  if (a.size() != b.size() || a.ring().unit() != b.ring().unit())
    throw std::invalid_argument("multiplying object vectors over different rings");
  const FusionRing& r = a.ring();
  std::vector<Multiplicity> c(r.rank(), 0);
  for (Index i = 0; i < r.rank(); ++i) {
    if (a[i] == 0) continue;
    for (Index j = 0; j < r.rank(); ++j) {
      if (b[j] == 0) continue;
      for (const auto& t : r.product(i, j)) c[t.simple] += a[i] * b[j] * t.multiplicity;
    }
  }
  return ObjectVector(r, std::move(c));
}

ObjectVector operator*(Multiplicity scalar, ObjectVector v) {
  if (scalar < 0) throw std::invalid_argument("negative scalar");
  for (auto& c : v.coeffs_) c *= scalar;
  return v;
}

bool operator==(const ObjectVector& a, const ObjectVector& b) {
  return a.coeffs_ == b.coeffs_ && a.ring_.same_structure(b.ring_);
}

// ---------------------------------------------------------------------------
// Subring

Subring::Subring(FusionRing ring, std::vector<Index> indices)
    : ring_(std::move(ring)), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  for (Index i : indices_)
    if (i >= ring_.rank()) throw std::invalid_argument("subring index " + str(i) + " out of range");
  if (!contains(ring_.unit())) throw std::invalid_argument("subring must contain the unit");
  for (Index i : indices_) {
    if (!contains(ring_.dual(i)))
      throw std::invalid_argument("subring not closed under duals at " + str(i));
    for (Index j : indices_)
      for (const auto& t : ring_.product(i, j))
        if (!contains(t.simple))
          throw std::invalid_argument("subring not closed under products: " + str(i) + " * " +
                                      str(j) + " contains " + str(t.simple));
  }
}

bool Subring::contains(Index i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

FusionRing restrict_to_subring(const Subring& s) {
  const FusionRing& r = s.ring();
  const auto& idx = s.indices();
  std::vector<Index> position(r.rank(), static_cast<Index>(-1));
  for (Index p = 0; p < idx.size(); ++p) position[idx[p]] = p;

  RawRing raw;
  raw.name = r.name() + "{";
  for (Index p = 0; p < idx.size(); ++p) raw.name += (p ? "," : "") + r.label(idx[p]);
  raw.name += "}";
  raw.rank = idx.size();
  raw.unit = position[r.unit()];
  for (Index i : idx) {
    raw.labels.push_back(r.label(i));
    raw.dual.push_back(position[r.dual(i)]);
  }
  for (Index i : idx)
    for (Index j : idx)
      for (const auto& t : r.product(i, j))
        raw.constants.push_back({position[i], position[j], position[t.simple], t.multiplicity});
  return validate_ring(raw);
}

FusionRing product_ring(const FusionRing& r1, const FusionRing& r2, std::size_t max_rank) {
  const std::size_t n1 = r1.rank(), n2 = r2.rank();
  if (n1 * n2 > max_rank) throw RankBoundExceeded(n1 * n2, max_rank);
  auto pair = [n2](Index a, Index b) { return a * n2 + b; };

  RawRing raw;
  raw.name = r1.name() + " x " + r2.name();
  raw.rank = n1 * n2;
  raw.unit = pair(r1.unit(), r2.unit());
  for (Index a = 0; a < n1; ++a) {
    for (Index b = 0; b < n2; ++b) {
      raw.labels.push_back("(" + r1.label(a) + "," + r2.label(b) + ")");
      raw.dual.push_back(pair(r1.dual(a), r2.dual(b)));
    }
  }
  for (Index a = 0; a < n1; ++a)
    for (Index b = 0; b < n2; ++b)
      for (Index c = 0; c < n1; ++c)
        for (Index d = 0; d < n2; ++d)
          for (const auto& s : r1.product(a, c))
            for (const auto& t : r2.product(b, d))
              raw.constants.push_back(
                  {pair(a, b), pair(c, d), pair(s.simple, t.simple), s.multiplicity * t.multiplicity});
  return validate_ring(raw);
}

}  // namespace fusion
