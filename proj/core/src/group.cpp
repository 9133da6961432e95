#include "fusion/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "fusion/error.hpp"
#include "fusion/exact.hpp"

namespace fusion {

namespace {

constexpr std::size_t kMaxNamedOrder = 64;

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<Index>> mult, Index identity, std::vector<std::string> labels)
    : order_(mult.size()), identity_(identity) {
  const std::size_t n = order_;
  if (n == 0) throw InvalidGroupTable("group order must be positive");
  if (identity >= n) throw InvalidGroupTable("identity index out of range");
  mult_.reserve(n * n);
  for (const auto& row : mult) {
    if (row.size() != n) throw InvalidGroupTable("multiplication table is not square");
    for (Index v : row) {
      if (v >= n) throw InvalidGroupTable("multiplication table entry " + str(v) + " out of range");
      mult_.push_back(v);
    }
  }
  for (Index a = 0; a < n; ++a)
    if (multiply(identity, a) != a || multiply(a, identity) != a)
      throw InvalidGroupTable("identity law fails at element " + str(a));
  inverse_.assign(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (multiply(a, b) == identity && multiply(b, a) == identity) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] == n) throw InvalidGroupTable("element " + str(a) + " has no inverse");
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
          throw InvalidGroupTable("associativity fails at (" + str(a) + ", " + str(b) + ", " + str(c) + ")");

  if (labels.empty()) {
    for (Index a = 0; a < n; ++a) labels.push_back(a == identity ? "1" : "g" + str(a));
  }
  if (labels.size() != n) throw InvalidGroupTable("expected " + str(n) + " labels");
  labels_ = std::move(labels);
}

std::vector<std::vector<Index>> GroupTable::table() const {
  std::vector<std::vector<Index>> t(order_, std::vector<Index>(order_));
  for (Index a = 0; a < order_; ++a)
    for (Index b = 0; b < order_; ++b) t[a][b] = multiply(a, b);
  return t;
}

bool GroupTable::is_abelian() const {
  for (Index a = 0; a < order_; ++a)
    for (Index b = a + 1; b < order_; ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

std::size_t GroupTable::element_order(Index a) const {
  std::size_t k = 1;
  for (Index x = a; x != identity_; x = multiply(x, a)) ++k;
  return k;
}

bool GroupTable::is_subgroup(std::span<const Index> subset) const {
  std::vector<char> in(order_, 0);
  for (Index a : subset) {
    if (a >= order_) return false;
    in[a] = 1;
  }
  if (!in[identity_]) return false;
  for (Index a = 0; a < order_; ++a) {
    if (!in[a]) continue;
    if (!in[inverse(a)]) return false;
    for (Index b = 0; b < order_; ++b)
      if (in[b] && !in[multiply(a, b)]) return false;
  }
  return true;
}

bool GroupTable::is_normal_subgroup(std::span<const Index> subset) const {
  if (!is_subgroup(subset)) return false;
  std::vector<char> in(order_, 0);
  for (Index a : subset) in[a] = 1;
  for (Index g = 0; g < order_; ++g)
    for (Index h : subset)
      if (!in[multiply(multiply(g, h), inverse(g))]) return false;
  return true;
}

GroupTable GroupTable::quotient(std::span<const Index> normal_subgroup, std::vector<Index>* coset_of) const {
  if (!is_normal_subgroup(normal_subgroup)) throw NotNormalSubgroup("subset is not a normal subgroup");
  std::vector<Index> rep(order_);
  for (Index g = 0; g < order_; ++g) {
    Index best = order_;
    for (Index h : normal_subgroup) best = std::min(best, multiply(g, h));
    rep[g] = best;
  }
  std::vector<Index> reps(rep.begin(), rep.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::map<Index, Index> position;
  for (Index p = 0; p < reps.size(); ++p) position[reps[p]] = p;

  const std::size_t m = reps.size();
  std::vector<std::vector<Index>> mult(m, std::vector<Index>(m));
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) mult[a][b] = position[rep[multiply(reps[a], reps[b])]];
  std::vector<std::string> labels;
  for (Index r : reps) labels.push_back(r == rep[identity_] ? "1" : "[" + labels_[r] + "]");
  if (coset_of) {
    coset_of->resize(order_);
    for (Index g = 0; g < order_; ++g) (*coset_of)[g] = position[rep[g]];
  }
  return GroupTable(std::move(mult), position[rep[identity_]], std::move(labels));
}

std::vector<std::size_t> GroupTable::abelian_invariants() const {
  if (!is_abelian()) throw NonAbelianGroup("abelian invariants of a non-abelian group");
  auto power = [this](Index x, std::size_t k) {
    Index r = identity_;
    for (std::size_t s = 0; s < k; ++s) r = multiply(r, x);
    return r;
  };
  std::vector<std::size_t> out;
  std::size_t rest = order_;
  while (rest > 1) {
    const auto p = static_cast<std::size_t>(exact::smallest_prime_factor(static_cast<std::int64_t>(rest)));
    std::size_t p_part = 1;
    while (rest % p == 0) {
      rest /= p;
      p_part *= p;
    }
    // f[k] = log_p #{x : x^(p^k) = 1}; #factors with exponent >= k is f[k] - f[k-1].
    std::vector<std::size_t> f{0};
    for (std::size_t pk = p;; pk *= p) {
      std::size_t count = 0;
      for (Index x = 0; x < order_; ++x)
        if (power(x, pk) == identity_) ++count;
      std::size_t lg = 0;
      for (std::size_t c = count; c > 1; c /= p) ++lg;
      f.push_back(lg);
      if (count == p_part) break;
    }
    std::vector<std::size_t> exps;  // multiplicity of each exponent
    const std::size_t top = f.size() - 1;
    for (std::size_t k = 1; k <= top; ++k) {
      const std::size_t at_least_k = f[k] - f[k - 1];
      const std::size_t at_least_next = (k < top) ? f[k + 1] - f[k] : 0;
      for (std::size_t c = at_least_next; c < at_least_k; ++c) {
        std::size_t pe = 1;
        for (std::size_t e = 0; e < k; ++e) pe *= p;
        exps.push_back(pe);
      }
    }
    std::sort(exps.begin(), exps.end());
    out.insert(out.end(), exps.begin(), exps.end());
  }
  return out;
}

std::string GroupTable::structure() const {
  if (!is_abelian()) return "nonabelian(" + str(order_) + ")";
  const auto inv = abelian_invariants();
  if (inv.empty()) return "1";
  std::string s;
  for (std::size_t n = 0; n < inv.size(); ++n) s += (n ? "xZ" : "Z") + str(inv[n]);
  return s;
}

GroupTable GroupTable::relabeled(std::vector<std::string> labels) const {
  return GroupTable(table(), identity_, std::move(labels));
}

// ---------------------------------------------------------------------------
// Constructors

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidGroupTable("cyclic group of order 0");
  std::vector<std::vector<Index>> mult(n, std::vector<Index>(n));
  std::vector<std::string> labels;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
    labels.push_back(a == 0 ? "1" : a == 1 ? "a" : "a^" + str(a));
  }
  return GroupTable(std::move(mult), 0, std::move(labels));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  auto pair = [nb](Index x, Index y) { return x * nb + y; };
  std::vector<std::vector<Index>> mult(na * nb, std::vector<Index>(na * nb));
  std::vector<std::string> labels;
  for (Index x = 0; x < na; ++x) {
    for (Index y = 0; y < nb; ++y) {
      for (Index u = 0; u < na; ++u)
        for (Index v = 0; v < nb; ++v) mult[pair(x, y)][pair(u, v)] = pair(a.multiply(x, u), b.multiply(y, v));
      labels.push_back((x == a.identity() && y == b.identity()) ? "1"
                                                                 : "(" + a.label(x) + "," + b.label(y) + ")");
    }
  }
  return GroupTable(std::move(mult), pair(a.identity(), b.identity()), std::move(labels));
}

GroupTable dihedral_group(std::size_t n) {
  if (n == 0) throw InvalidGroupTable("dihedral group needs n >= 1");
  // r^k s^e stored at k + n e; (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e+f).
  std::vector<std::vector<Index>> mult(2 * n, std::vector<Index>(2 * n));
  std::vector<std::string> labels;
  for (Index x = 0; x < 2 * n; ++x) {
    const Index a = x % n, e = x / n;
    for (Index y = 0; y < 2 * n; ++y) {
      const Index b = y % n, f = y / n;
      const Index k = e == 0 ? (a + b) % n : (a + n - b) % n;
      mult[x][y] = k + n * ((e + f) % 2);
    }
    std::string r = a == 0 ? "" : a == 1 ? "r" : "r^" + str(a);
    if (e == 1) r += "s";
    labels.push_back(r.empty() ? "1" : r);
  }
  return GroupTable(std::move(mult), 0, std::move(labels));
}

GroupTable quaternion_group() {
  // Index = unit + 4 * sign, units 1, i, j, k.
  static constexpr int unit_mult[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mult[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* names[4] = {"1", "i", "j", "k"};
  std::vector<std::vector<Index>> mult(8, std::vector<Index>(8));
  std::vector<std::string> labels;
  for (Index x = 0; x < 8; ++x) {
    const Index u = x % 4, s = x / 4;
    for (Index y = 0; y < 8; ++y) {
      const Index v = y % 4, t = y / 4;
      mult[x][y] = static_cast<Index>(unit_mult[u][v]) + 4 * ((s + t + static_cast<Index>(sign_mult[u][v])) % 2);
    }
    labels.push_back(s == 0 ? names[u] : (u == 0 ? "-1" : std::string("-") + names[u]));
  }
  return GroupTable(std::move(mult), 0, std::move(labels));
}

namespace {

std::string cycle_notation(const std::vector<Index>& p) {
  std::vector<char> seen(p.size(), 0);
  std::string out;
  for (Index start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += "(";
    for (Index x = start; !seen[x]; x = p[x]) {
      seen[x] = 1;
      out += str(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "1" : out;
}

}  // namespace

GroupTable group_from_permutations(const std::vector<std::vector<Index>>& generators) {
  if (generators.empty()) return cyclic_group(1);
  const std::size_t degree = generators.front().size();
  for (const auto& g : generators) {
    std::vector<Index> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (Index x = 0; x < sorted.size(); ++x)
      if (g.size() != degree || sorted[x] != x) throw InvalidGroupTable("generator is not a permutation");
  }
  auto compose = [degree](const std::vector<Index>& p, const std::vector<Index>& q) {
    std::vector<Index> r(degree);
    for (Index x = 0; x < degree; ++x) r[x] = p[q[x]];
    return r;
  };
  std::vector<Index> id(degree);
  std::iota(id.begin(), id.end(), Index{0});

  std::vector<std::vector<Index>> elems{id};
  std::map<std::vector<Index>, Index> index{{id, 0}};
  for (std::size_t cur = 0; cur < elems.size(); ++cur) {
    for (const auto& g : generators) {
      auto next = compose(elems[cur], g);
      if (index.emplace(next, elems.size()).second) {
        elems.push_back(std::move(next));
        if (elems.size() > 4096) throw InvalidGroupTable("permutation group too large");
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<Index>> mult(n, std::vector<Index>(n));
  std::vector<std::string> labels;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) mult[a][b] = index.at(compose(elems[a], elems[b]));
    labels.push_back(cycle_notation(elems[a]));
  }
  return GroupTable(std::move(mult), 0, std::move(labels));
}

GroupTable symmetric_group(std::size_t n) {
  if (n <= 1) return cyclic_group(1);
  std::vector<Index> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), Index{0});
  std::swap(swap[0], swap[1]);
  for (Index x = 0; x < n; ++x) cycle[x] = (x + 1) % n;
  return group_from_permutations({swap, cycle});
}

GroupTable alternating_group(std::size_t n) {
  if (n <= 2) return cyclic_group(1);
  std::vector<std::vector<Index>> gens;
  for (Index c = 2; c < n; ++c) {
    std::vector<Index> p(n);
    std::iota(p.begin(), p.end(), Index{0});
    p[0] = 1;
    p[1] = c;
    p[c] = 0;
    gens.push_back(std::move(p));
  }
  return group_from_permutations(gens);
}

// ---------------------------------------------------------------------------
// Names

namespace {

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last)
    throw UnknownName("cannot parse group name '" + std::string(whole) + "'");
  return v;
}

void require_order(std::size_t order, std::string_view whole) {
  if (order == 0 || order > kMaxNamedOrder)
    throw UnknownName("group '" + std::string(whole) + "' has order outside 1.." + str(kMaxNamedOrder));
}

GroupTable base_group(std::string_view f, std::string_view whole) {
  if (f == "1" || f == "C1") return cyclic_group(1);
  if (f == "V4" || f == "K4") return direct_product(cyclic_group(2), cyclic_group(2));
  if (f == "Q8") return quaternion_group();
  if (f.size() >= 2) {
    const char head = f.front();
    const auto tail = f.substr(1);
    if (head == 'Z' || head == 'C') {
      const auto n = parse_count(tail, whole);
      require_order(n, whole);
      return cyclic_group(n);
    }
    if (head == 'D') {
      const auto n = parse_count(tail, whole);
      require_order(2 * n, whole);
      return dihedral_group(n);
    }
    if (head == 'S') {
      const auto n = parse_count(tail, whole);
      if (n > 4) require_order(kMaxNamedOrder + 1, whole);
      return symmetric_group(n);
    }
    if (head == 'A') {
      const auto n = parse_count(tail, whole);
      if (n > 5) require_order(kMaxNamedOrder + 1, whole);
      return alternating_group(n);
    }
  }
  throw UnknownName("unknown group name '" + std::string(whole) + "'");
}

}  // namespace

GroupTable named_group(std::string_view name) {
  if (name.empty()) throw UnknownName("empty group name");
  std::vector<std::string_view> factors;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= name.size(); ++pos) {
    if (pos == name.size() || name[pos] == 'x') {
      factors.push_back(name.substr(start, pos - start));
      start = pos + 1;
    }
  }
  std::optional<GroupTable> result;
  for (auto f : factors) {
    std::size_t power = 1;
    if (const auto caret = f.find('^'); caret != std::string_view::npos) {
      power = parse_count(f.substr(caret + 1), name);
      f = f.substr(0, caret);
    }
    if (power == 0) throw UnknownName("zero exponent in group name '" + std::string(name) + "'");
    const GroupTable g = base_group(f, name);
    for (std::size_t p = 0; p < power; ++p) {
      const std::size_t order = (result ? result->order() : 1) * g.order();
      require_order(order, name);
      result = result ? direct_product(*result, g) : g;
    }
  }
  return *result;
}

std::vector<std::string> catalog_group_names(std::size_t max_order) {
  static const std::vector<std::pair<std::string, std::size_t>> known = [] {
    std::vector<std::pair<std::string, std::size_t>> v;
    for (std::size_t n = 1; n <= kMaxNamedOrder; ++n) v.emplace_back("Z" + str(n), n);
    const std::pair<const char*, std::size_t> extra[] = {
        {"V4", 4},       {"Z2xZ4", 8},     {"Z2^3", 8},     {"Z3xZ3", 9},     {"Z2xZ6", 12},
        {"Z2xZ8", 16},   {"Z4xZ4", 16},    {"Z2xZ2xZ4", 16}, {"Z2^4", 16},    {"S3", 6},
        {"D4", 8},       {"Q8", 8},        {"D5", 10},      {"A4", 12},       {"D6", 12},
        {"D7", 14},      {"D8", 16},       {"Z2xD4", 16},   {"Z2xQ8", 16},    {"S4", 24},
        {"Z3xS3", 18},   {"Z5xZ5", 25},    {"Z3^3", 27},    {"Z2^5", 32},     {"A5", 60},
        {"Z2^6", 64},    {"Z4^3", 64},     {"Z8xZ8", 64},
    };
    for (const auto& [name, order] : extra) v.emplace_back(name, order);
    return v;
  }();
  std::vector<std::string> out;
  for (const auto& [name, order] : known)
    if (order <= max_order) out.push_back(name);
  return out;
}

}  // namespace fusion
