#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hibilab/betti.hpp"
#include "hibilab/bits.hpp"
#include "hibilab/errors.hpp"
#include "hibilab/homology.hpp"
#include "hibilab/monomial.hpp"

namespace hibilab {

/// Simplicial complex on vertices 0..n-1 given by its facets. The void
/// complex (no faces at all) has no facets; the irrelevant complex {{}} has
/// the single facet {}.
class SimplicialComplex {
 public:
  SimplicialComplex() : vars_(VarSpace::plain(0)) {}
  SimplicialComplex(int n, std::vector<Mask> facets) : SimplicialComplex(VarSpace::plain(n), std::move(facets)) {}
  SimplicialComplex(VarSpace vars, std::vector<Mask> facets) : vars_(std::move(vars)) {
    for (Mask f : facets)
      if (!is_subset(f, vars_.all())) throw GroundSetMismatch("facet uses a vertex outside the vertex set");
    facets_ = maximal_sets(std::move(facets));
  }

  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex irrelevant(int n) { return SimplicialComplex(n, {0}); }
  static SimplicialComplex simplex(int n) { return SimplicialComplex(n, {low_bits(n)}); }

  int num_vertices() const { return vars_.size(); }
  const VarSpace& vars() const { return vars_; }
  const std::vector<Mask>& facets() const { return facets_; }
  Mask ground() const { return vars_.all(); }
  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }

  bool contains(Mask face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](Mask f) { return is_subset(face, f); });
  }
  /// -1 for the irrelevant complex; -2 for the void complex.
  int dimension() const {
    int d = -2;
    for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
    return d;
  }
  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(), [&](Mask f) { return popcount(f) == popcount(facets_[0]); });
  }
  /// Vertices that lie in some face.
  Mask used_vertices() const {
    Mask m = 0;
    for (Mask f : facets_) m |= f;
    return m;
  }

  /// Link of a face: facets containing it, with the face removed.
  SimplicialComplex link(Mask face) const {
    std::vector<Mask> out;
    for (Mask f : facets_)
      if (is_subset(face, f)) out.push_back(f & ~face);
    return SimplicialComplex(vars_, std::move(out));
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vars_.size() == b.vars_.size() && a.facets_ == b.facets_;
  }

 private:
  VarSpace vars_;
  std::vector<Mask> facets_;
};

/// Complex generated by the complements of the facets.
inline SimplicialComplex complement_complex(const SimplicialComplex& d) {
  std::vector<Mask> out;
  for (Mask f : d.facets()) out.push_back(d.ground() & ~f);
  return SimplicialComplex(d.vars(), std::move(out));
}

/// Minimal nonfaces: minimal transversals of the facet complements.
inline std::vector<Mask> minimal_nonfaces(const SimplicialComplex& d) {
  std::vector<Mask> comps;
  for (Mask f : d.facets()) comps.push_back(d.ground() & ~f);
  return minimal_transversals(comps);
}

inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& d) {
  std::vector<SquarefreeMonomial> gens;
  for (Mask m : minimal_nonfaces(d)) gens.emplace_back(m);
  return MonomialIdeal(d.vars(), std::move(gens));
}

/// The complex whose Stanley-Reisner ideal is `ideal`: its facets are the
/// complements of the minimal transversals of the generator supports.
inline SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal) {
  std::vector<Mask> sup;
  for (const auto& g : ideal.gens()) sup.push_back(g.support());
  std::vector<Mask> facets;
  for (Mask t : minimal_transversals(sup)) facets.push_back(ideal.vars().all() & ~t);
  return SimplicialComplex(ideal.vars(), std::move(facets));
}

/// Complements of the nonfaces. Void and simplex are exchanged; the
/// boundary of a simplex goes to the irrelevant complex.
inline SimplicialComplex alexander_dual(const SimplicialComplex& d) {
  std::vector<Mask> facets;
  for (Mask m : minimal_nonfaces(d)) facets.push_back(d.ground() & ~m);
  return SimplicialComplex(d.vars(), std::move(facets));
}

inline MonomialIdeal facet_ideal(const SimplicialComplex& d) {
  std::vector<SquarefreeMonomial> gens;
  for (Mask f : d.facets()) gens.emplace_back(f);
  return MonomialIdeal(d.vars(), std::move(gens));
}

/// Complex whose facets are the generator supports (so its facet ideal is `ideal`).
inline SimplicialComplex complex_of_facet_ideal(const MonomialIdeal& ideal) {
  std::vector<Mask> sup;
  for (const auto& g : ideal.gens()) sup.push_back(g.support());
  return SimplicialComplex(ideal.vars(), std::move(sup));
}

inline std::vector<Mask> minimal_vertex_covers(const SimplicialComplex& d, std::size_t facet_cap = 25) {
  if (d.facets().size() > facet_cap)
    throw TooLarge("minimal vertex covers: " + std::to_string(d.facets().size()) + " facets exceed the cap of " +
                   std::to_string(facet_cap));
  return minimal_transversals(d.facets());
}

/// I* = I_{Gamma^dual} for the complex Gamma with I_Gamma = I; generated by the
/// minimal transversals of the generators.
inline MonomialIdeal dual_star(const MonomialIdeal& ideal) {
  std::vector<Mask> sup;
  for (const auto& g : ideal.gens()) sup.push_back(g.support());
  std::vector<SquarefreeMonomial> gens;
  for (Mask t : minimal_transversals(sup)) gens.emplace_back(t);
  return MonomialIdeal(ideal.vars(), std::move(gens));
}

/// All minimal vertex covers share one size. The void complex has no cover
/// at all, the irrelevant complex none either (its only facet is empty);
/// both count as unmixed.
inline bool is_unmixed(const SimplicialComplex& d, std::size_t facet_cap = 25) {
  const auto covers = minimal_vertex_covers(d, facet_cap);
  return std::all_of(covers.begin(), covers.end(), [&](Mask c) { return popcount(c) == popcount(covers[0]); });
}

/// Reisner's criterion: every link (including the link of the empty face)
/// has vanishing reduced homology below its dimension. The void complex is
/// taken to be Cohen-Macaulay.
inline bool is_cohen_macaulay(const SimplicialComplex& d, Field field = Field::rationals, int vertex_cap = 16) {
  if (popcount(d.used_vertices()) > vertex_cap)
    throw TooLarge("Cohen-Macaulay check limited to " + std::to_string(vertex_cap) + " vertices");
  if (d.is_void()) return true;
  if (!d.is_pure()) return false;
  for (const auto& level : faces_by_size(d.facets())) {
    for (Mask face : level) {
      const SimplicialComplex lk = d.link(face);
      const auto h = reduced_homology(lk.facets(), field);
      const int top = lk.dimension();
      for (int k = -1; k < top; ++k)
        if (h[k + 1] != 0) return false;
    }
  }
  return true;
}

/// Hochster's formula: beta_{i,W}(I_Delta) = dim H~_{|W|-i-2}(Delta restricted to W).
inline BettiTable hochster_betti(const SimplicialComplex& d, Field field = Field::rationals) {
  BettiTable table;
  const int n = d.num_vertices();
  if (n > 20) throw TooLarge("Hochster formula limited to 20 vertices");
  for (Mask w = 0; w <= low_bits(n); ++w) {
    std::vector<Mask> restricted;
    for (Mask f : d.facets()) restricted.push_back(f & w);
    if (d.is_void()) {
      // every subset is a nonface; only the empty set contributes
      if (w == 0) table.add(0, 0, 1);
      continue;
    }
    const auto h = reduced_homology(maximal_sets(restricted), field);
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
      const int k = static_cast<int>(idx) - 1;
      const int i = popcount(w) - k - 2;
      if (i >= 0) table.add(i, w, h[idx]);
    }
    if (w == low_bits(n)) break;
  }
  return table;
}

}  // namespace hibilab
