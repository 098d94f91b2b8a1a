#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hibilab/errors.hpp"
#include "hibilab/lattice.hpp"
#include "hibilab/monomial.hpp"
#include "hibilab/poset.hpp"
#include "hibilab/simplicial.hpp"

namespace hibilab {

/// Relation matrix (1 where a < b) under the relabeling that minimizes it
/// lexicographically, among relabelings that sort elements by (down-set size,
/// up-set size). Cells are listed so that placing the element at position k
/// completes the leading (k+1) x (k+1) block, which lets the search prune.
/// Two posets are isomorphic iff their canonical forms agree.
inline std::vector<std::uint8_t> canonical_form(const Poset& p) {
  const int n = p.size();
  if (n > 10) throw TooLarge("canonical form limited to 10 elements");
  std::vector<std::pair<std::size_t, std::size_t>> inv(n);
  for (int a = 0; a < n; ++a) inv[a] = {p.down_set(a).count(), p.up_set(a).count()};
  std::vector<int> order(n);
  for (int a = 0; a < n; ++a) order[a] = a;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
  std::vector<std::uint8_t> best, cur;
  std::vector<int> slot(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int pos, bool equal_so_far) -> void {
    if (pos == n) {
      if (best.empty() || cur < best) best = cur;
      return;
    }
    for (int a = 0; a < n; ++a) {
      if (used[a] || inv[a] != inv[order[pos]]) continue;
      const std::size_t mark = cur.size();
      for (int q = 0; q < pos; ++q) {
        cur.push_back(p.less(slot[q], a) ? 1 : 0);
        cur.push_back(p.less(a, slot[q]) ? 1 : 0);
      }
      bool equal = equal_so_far;
      bool prune = false;
      if (!best.empty() && equal_so_far) {
        for (std::size_t k = mark; k < cur.size(); ++k)
          if (cur[k] != best[k]) {
            prune = cur[k] > best[k];
            equal = false;
            break;
          }
      }
      if (!prune) {
        used[a] = 1;
        slot[pos] = a;
        self(self, pos + 1, best.empty() ? true : equal);
        used[a] = 0;
      }
      cur.resize(mark);
    }
  };
  rec(rec, 0, true);
  best.insert(best.begin(), static_cast<std::uint8_t>(n));
  return best;
}

inline bool are_isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && a.covers().size() == b.covers().size() && canonical_form(a) == canonical_form(b);
}

/// One representative of every isomorphism class of posets on n elements,
/// found among the naturally labeled ones (a < b only if a < b as integers).
inline std::vector<Poset> posets_of_size(int n) {
  if (n < 0 || n > 7) throw TooLarge("poset enumeration limited to 7 elements");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  const std::size_t m = pairs.size();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<Poset> out;
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << m); ++rel) {
    std::vector<Mask> below(n, 0);
    for (std::size_t k = 0; k < m; ++k)
      if (rel >> k & 1) below[pairs[k].second] |= bit(pairs[k].first);
    bool transitive = true;
    for (int b = 0; b < n && transitive; ++b)
      for_each_bit(below[b], [&](int a) { transitive = transitive && is_subset(below[a], below[b]); });
    if (!transitive) continue;
    std::vector<std::pair<int, int>> less;
    for (int b = 0; b < n; ++b)
      for_each_bit(below[b], [&](int a) { less.emplace_back(a, b); });
    Poset p = Poset::from_relations(n, less, names);
    if (seen.insert(canonical_form(p)).second) out.push_back(std::move(p));
  }
  return out;
}

/// Isomorphism classes of posets with 1..max_n elements.
inline std::vector<Poset> poset_corpus(int max_n = 4) {
  std::vector<Poset> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& p : posets_of_size(n)) out.push_back(std::move(p));
  return out;
}

/// J(P) for every poset of the corpus.
inline std::vector<Lattice> distributive_corpus(int max_n = 4) {
  std::vector<Lattice> out;
  for (const auto& p : poset_corpus(max_n)) out.push_back(lattice_of_ideals(p));
  return out;
}

/// Lattices obtained by adjoining a new bottom and top to each poset with at
/// most max_n elements (plus the two-element chain); posets whose bounded
/// extension is not a lattice are skipped.
inline std::vector<Lattice> bounded_lattice_corpus(int max_n = 4) {
  std::vector<Lattice> out;
  out.push_back(boolean_lattice(1));
  for (const auto& p : poset_corpus(max_n)) {
    const int n = p.size();
    std::vector<std::pair<int, int>> less;
    std::vector<std::string> names{"0"};
    for (int a = 0; a < n; ++a) {
      names.push_back(p.name(a));
      less.emplace_back(0, a + 1);
      less.emplace_back(a + 1, n + 1);
    }
    names.emplace_back("1");
    less.emplace_back(0, n + 1);
    for (auto [a, b] : p.covers()) less.emplace_back(a + 1, b + 1);
    try {
      out.push_back(build_lattice(Poset::from_relations(n + 2, less, names)));
    } catch (const NotALattice&) {
    }
  }
  return out;
}

/// All poset ideals of a lattice (as element subsets), via its order.
inline std::vector<Subset> lattice_ideals(const Lattice& L) {
  const Poset order = L.order();
  std::vector<Subset> out;
  for (Mask m : poset_ideal_masks(order)) out.push_back(subset_from_mask(static_cast<std::size_t>(L.size()), m));
  return out;
}

/// All nonempty segments of a lattice, each once, as intersections I n J.
inline std::vector<Subset> lattice_segments(const Lattice& L) {
  if (L.size() > kMaskBits) throw TooLarge("segment enumeration limited to 64-element lattices");
  const auto ideals = lattice_ideals(L);
  std::set<Mask> seen;
  std::vector<Subset> out;
  for (const auto& I : ideals)
    for (const auto& K : ideals) {
      const Subset s = I & ~K;  // K's complement is a coideal
      const Mask m = mask_from_subset(s);
      if (m != 0 && seen.insert(m).second) out.push_back(s);
    }
  return out;
}

/// Random complex on exactly n vertices with at most max_facets facets.
/// Occasionally yields the void, irrelevant or full complex.
template <typename Rng>
SimplicialComplex random_complex_on(Rng& rng, int n, int max_facets = 10) {
  std::uniform_int_distribution<int> kind(0, 19);
  const int k = kind(rng);
  if (k == 0) return SimplicialComplex::void_complex(n);
  if (k == 1) return SimplicialComplex::irrelevant(n);
  if (k == 2) return SimplicialComplex::simplex(n);
  std::uniform_int_distribution<int> nf(1, max_facets);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  std::bernoulli_distribution take(density(rng));
  std::vector<Mask> facets;
  const int f = nf(rng);
  for (int i = 0; i < f; ++i) {
    Mask m = 0;
    for (int v = 0; v < n; ++v)
      if (take(rng)) m |= bit(v);
    facets.push_back(m);
  }
  return SimplicialComplex(n, std::move(facets));
}

/// Same, with the vertex count drawn from 1..max_vertices.
template <typename Rng>
SimplicialComplex random_complex(Rng& rng, int max_vertices = 8, int max_facets = 10) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  return random_complex_on(rng, n, max_facets);
}

/// A lattice with one distinguished segment and named Hibi variables.
struct SegmentSample {
  Lattice lattice;
  Subset segment;
  VarSpace vars;
};

/// J(P) for P = {a,b,c,d} with b < d and c < d, y-variables u,v,w,x, and the
/// segment of all elements except the bottom and top. Its Hibi ideal has a
/// linear resolution.
inline SegmentSample linear_sample() {
  Poset p = Poset::from_relations(4, {{1, 3}, {2, 3}}, {"a", "b", "c", "d"});
  VarSpace vars = VarSpace::hibi_for(p, {"u", "v", "w", "x"});
  Lattice L = lattice_of_ideals(p);
  Subset s = L.full_subset();
  s.reset(L.bottom());
  s.reset(L.top());
  return {std::move(L), std::move(s), std::move(vars)};
}

/// B_3 over {a,b,c} with y-variables u,v,w and the segment of all elements
/// except the bottom and top. Its Hibi ideal has no linear resolution.
inline SegmentSample nonlinear_sample() {
  Poset p = Poset::from_relations(3, {}, {"a", "b", "c"});
  VarSpace vars = VarSpace::hibi_for(p, {"u", "v", "w"});
  Lattice L = lattice_of_ideals(p);
  Subset s = L.full_subset();
  s.reset(L.bottom());
  s.reset(L.top());
  return {std::move(L), std::move(s), std::move(vars)};
}

}  // namespace hibilab
