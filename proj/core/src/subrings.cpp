#include "fusion/subrings.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "fusion/error.hpp"

namespace fusion {

bool is_invertible(const FusionRing& ring, Index i) {
  const auto terms = ring.product(i, ring.dual(i));
  return terms.size() == 1 && terms[0].simple == ring.unit() && terms[0].multiplicity == 1;
}

PicardGroup picard_group(const FusionRing& ring) {
  std::vector<Index> elems;
  std::vector<Index> position(ring.rank(), static_cast<Index>(-1));
  for (Index i = 0; i < ring.rank(); ++i) {
    if (is_invertible(ring, i)) {
      position[i] = elems.size();
      elems.push_back(i);
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<Index>> mult(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const auto terms = ring.product(elems[a], elems[b]);
      // A product of invertibles is a single invertible simple.
      if (terms.size() != 1 || terms[0].multiplicity != 1 || position[terms[0].simple] == static_cast<Index>(-1))
        throw InvalidGroupTable("product of invertibles " + ring.label(elems[a]) + " and " +
                                ring.label(elems[b]) + " is not invertible");
      mult[a][b] = position[terms[0].simple];
    }
  }
  std::vector<std::string> labels;
  for (Index e : elems) labels.push_back(ring.label(e));
  GroupTable table(std::move(mult), position[ring.unit()], std::move(labels));
  for (Index a = 0; a < n; ++a)
    if (elems[table.inverse(a)] != ring.dual(elems[a]))
      throw InvalidGroupTable("group inverse disagrees with the ring dual at " + ring.label(elems[a]));
  return PicardGroup{std::move(elems), std::move(table)};
}

namespace {

// Fixed-point closure on a membership mask.
std::vector<Index> close(const FusionRing& ring, std::vector<char>& member, std::deque<Index> work) {
  std::vector<Index> members;
  for (Index i = 0; i < ring.rank(); ++i)
    if (member[i]) members.push_back(i);

  auto add = [&](Index k) {
    if (!member[k]) {
      member[k] = 1;
      members.push_back(k);
      work.push_back(k);
    }
  };
  while (!work.empty()) {
    const Index x = work.front();
    work.pop_front();
    add(ring.dual(x));
    // Iterate over a snapshot; new members get their own turn in the queue.
    const std::size_t count = members.size();
    for (std::size_t p = 0; p < count; ++p) {
      const Index y = members[p];
      for (const auto& t : ring.product(x, y)) add(t.simple);
      for (const auto& t : ring.product(y, x)) add(t.simple);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Index> closure_of(const FusionRing& ring, std::span<const Index> seed) {
  std::vector<char> member(ring.rank(), 0);
  std::deque<Index> work;
  member[ring.unit()] = 1;
  work.push_back(ring.unit());
  for (Index s : seed) {
    if (s >= ring.rank()) throw std::out_of_range("seed index out of range");
    if (!member[s]) {
      member[s] = 1;
      work.push_back(s);
    }
  }
  return close(ring, member, std::move(work));
}

}  // namespace

Subring generated_subring(const FusionRing& ring, std::span<const Index> seed) {
  return Subring(ring, closure_of(ring, seed));
}

Subring pointed_part(const FusionRing& ring) {
  std::vector<Index> inv;
  for (Index i = 0; i < ring.rank(); ++i)
    if (is_invertible(ring, i)) inv.push_back(i);
  return generated_subring(ring, inv);
}

std::vector<Subring> enumerate_subrings(const FusionRing& ring, std::size_t max_rank) {
  if (ring.rank() > max_rank) throw RankBoundExceeded(ring.rank(), max_rank);
  const std::size_t n = ring.rank();

  std::vector<std::vector<Index>> principal;
  for (Index i = 0; i < n; ++i) {
    const Index seed[] = {i};
    principal.push_back(closure_of(ring, seed));
  }

  std::set<std::vector<Index>> found;
  std::deque<const std::vector<Index>*> work;
  auto insert = [&](std::vector<Index> s) {
    auto [it, fresh] = found.insert(std::move(s));
    if (fresh) work.push_back(&*it);
  };
  insert({ring.unit()});
  for (const auto& p : principal) insert(p);

  while (!work.empty()) {
    const std::vector<Index>& current = *work.front();
    work.pop_front();
    for (Index i = 0; i < n; ++i) {
      if (std::binary_search(current.begin(), current.end(), i)) continue;
      std::vector<Index> seed = current;
      seed.insert(seed.end(), principal[i].begin(), principal[i].end());
      insert(closure_of(ring, seed));
    }
  }

  std::vector<Subring> out;
  out.reserve(found.size());
  for (const auto& s : found) out.emplace_back(ring, s);
  return out;
}

}  // namespace fusion
