#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hibilab/betti.hpp"
#include "hibilab/errors.hpp"
#include "hibilab/lattice.hpp"
#include "hibilab/monomial.hpp"
#include "hibilab/simplicial.hpp"

namespace hibilab {

/// A concrete counterexample to a criterion: the elements involved (lattice
/// element indices unless stated otherwise) plus a readable description.
struct Witness {
  std::string description;
  std::vector<int> elements;
};

struct CriterionReport {
  std::string theorem;
  bool verdict = true;
  std::vector<Witness> witnesses;
  /// Failures of an equivalent reformulation, when one is evaluated too.
  std::vector<Witness> dual_witnesses;

  nlohmann::json to_json() const {
    auto ws = [](const std::vector<Witness>& v) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& w : v) a.push_back({{"description", w.description}, {"elements", w.elements}});
      return a;
    };
    return {{"theorem", theorem}, {"verdict", verdict}, {"witnesses", ws(witnesses)}, {"dual_witnesses", ws(dual_witnesses)}};
  }
};

namespace detail {

inline void require_split(const Lattice& L, const Subset& I, const Subset& J) {
  if (!is_distributive(L)) throw PreconditionViolated("lattice is not distributive");
  if (I.size() != static_cast<std::size_t>(L.size()) || J.size() != static_cast<std::size_t>(L.size()))
    throw SizeMismatch("subset sizes differ from the lattice size");
  if (!is_lattice_ideal(L, I)) throw PreconditionViolated("first set is not a poset ideal of the lattice");
  if (!is_lattice_coideal(L, J)) throw PreconditionViolated("second set is not a poset coideal of the lattice");
  if ((I | J) != L.full_subset()) throw PreconditionViolated("ideal and coideal do not cover the lattice");
}

inline std::vector<int> upper_list(const Lattice& L, int e) {
  auto s = L.upper_covers(e);
  return {s.begin(), s.end()};
}
inline std::vector<int> lower_list(const Lattice& L, int e) {
  auto s = L.lower_covers(e);
  return {s.begin(), s.end()};
}

}  // namespace detail

/// H_{I n J} = H_I n H_J exactly when every cover q < p has p in I or q in J.
/// Witnesses are the covers (q, p) with p outside I and q outside J.
inline CriterionReport check_equal(const Lattice& L, const Subset& I, const Subset& J, bool crosscheck = false) {
  detail::require_split(L, I, J);
  CriterionReport rep;
  rep.theorem = "hibi-intersection-equality";
  for (int p = 0; p < L.size(); ++p) {
    if (I.test(p)) continue;
    for (int q : L.lower_covers(p))
      if (!J.test(q))
        rep.witnesses.push_back({"cover " + L.name(q) + " < " + L.name(p) + " with upper end outside the ideal and lower end outside the coideal", {q, p}});
  }
  rep.verdict = rep.witnesses.empty();
  if (crosscheck) {
    const bool actual = hibi_ideal(L, I & J) == intersect(hibi_ideal(L, I), hibi_ideal(L, J));
    if (actual != rep.verdict) throw CrosscheckFailure("equality criterion disagrees with the computed intersection");
  }
  return rep;
}

/// Linearity of H_I n H_J when it equals H_{I n J} and I n J is nonempty.
/// Evaluates both forms: every p lies in I or has meet(N(p)) in J; every r lies
/// in J or has join(M(r)) in I. The meet of no neighbors of p is p itself, and
/// likewise for joins.
inline CriterionReport check_linear(const Lattice& L, const Subset& I, const Subset& J, bool crosscheck = false,
                                    const OracleOptions& opt = {}) {
  detail::require_split(L, I, J);
  if ((I & J).none()) throw PreconditionViolated("ideal and coideal are disjoint");
  if (!check_equal(L, I, J).verdict) throw PreconditionViolated("H of the intersection differs from the intersection of the H's");
  CriterionReport rep;
  rep.theorem = "hibi-intersection-linearity";
  for (int p = 0; p < L.size(); ++p) {
    if (I.test(p)) continue;
    const int m = L.meet_of(detail::lower_list(L, p), p);
    if (!J.test(m)) rep.witnesses.push_back({"element " + L.name(p) + " outside the ideal with meet of lower neighbors " + L.name(m) + " outside the coideal", {p, m}});
  }
  for (int r = 0; r < L.size(); ++r) {
    if (J.test(r)) continue;
    const int j = L.join_of(detail::upper_list(L, r), r);
    if (!I.test(j)) rep.dual_witnesses.push_back({"element " + L.name(r) + " outside the coideal with join of upper neighbors " + L.name(j) + " outside the ideal", {r, j}});
  }
  rep.verdict = rep.witnesses.empty();
  if (rep.verdict != rep.dual_witnesses.empty()) throw CrosscheckFailure("the two forms of the linearity criterion disagree");
  if (crosscheck) {
    const bool actual = has_linear_resolution(intersect(hibi_ideal(L, I), hibi_ideal(L, J)), opt);
    if (actual != rep.verdict) throw CrosscheckFailure("linearity criterion disagrees with the Betti oracle");
  }
  return rep;
}

struct EmptySplit {
  MonomialIdeal intersection;  ///< H_I n H_J
  MonomialIdeal certificate;   ///< lcm(u_p, u_q) over covers q < p, q in I, p in J
  std::vector<std::pair<int, int>> crossing_covers;  ///< (q, p)
  int expected_degree = 0;     ///< rank L + 1
  bool certificate_matches = false;
  bool degrees_ok = false;
};

/// Disjoint split L = I u J: the intersection H_I n H_J is generated by the
/// lcms along the covers leaving I, all of degree rank L + 1.
inline EmptySplit empty_case(const Lattice& L, const Subset& I, const Subset& J, bool crosscheck = false,
                             const OracleOptions& opt = {}) {
  detail::require_split(L, I, J);
  if ((I & J).any()) throw PreconditionViolated("ideal and coideal intersect");
  const VarSpace vars = VarSpace::hibi_for(L.irreducibles());
  EmptySplit out{intersect(hibi_ideal(L, I, vars), hibi_ideal(L, J, vars)), MonomialIdeal::zero(vars), {}, 0, false, false};
  std::vector<SquarefreeMonomial> cert;
  for (int p = 0; p < L.size(); ++p) {
    if (!J.test(p)) continue;
    for (int q : L.lower_covers(p))
      if (I.test(q)) {
        out.crossing_covers.emplace_back(q, p);
        cert.push_back(lcm(hibi_generator(vars, L.label(p)), hibi_generator(vars, L.label(q))));
      }
  }
  out.certificate = MonomialIdeal(vars, std::move(cert));
  out.expected_degree = L.irreducibles().size() + 1;
  out.certificate_matches = out.certificate == out.intersection;
  out.degrees_ok = std::all_of(out.certificate.gens().begin(), out.certificate.gens().end(),
                               [&](SquarefreeMonomial g) { return g.degree() == out.expected_degree; });
  if (crosscheck) {
    if (!out.certificate_matches) throw CrosscheckFailure("generator certificate differs from the computed intersection");
    if (!has_linear_resolution(out.intersection, opt)) throw CrosscheckFailure("intersection of a disjoint split is not linear");
  }
  return out;
}

/// If I, J and I + J have d-linear resolutions and I n J is generated in
/// degree d + 1, then I n J has a (d+1)-linear resolution. Preconditions are
/// checked with the oracle; the conclusion is returned as computed.
inline bool lemma_d_plus_1_property(const MonomialIdeal& I, const MonomialIdeal& J, const OracleOptions& opt = {}) {
  require_same_ring(I, J);
  const auto d = I.generator_degree();
  if (!d || J.generator_degree() != d) throw PreconditionViolated("I and J must be generated in one common degree");
  const MonomialIdeal s = sum(I, J);
  if (s.generator_degree() != d) throw PreconditionViolated("I + J is not generated in degree d");
  if (!has_linear_resolution(I, opt) || !has_linear_resolution(J, opt) || !has_linear_resolution(s, opt))
    throw PreconditionViolated("I, J and I + J must have linear resolutions");
  const MonomialIdeal x = intersect(I, J);
  if (x.generator_degree() != *d + 1) throw PreconditionViolated("I n J is not generated in degree d + 1");
  return graded_betti_oracle(x, opt).is_linear(*d + 1);
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Closed form for H of B_r without bottom and top:
/// beta_{i,r+i} = C(r,i)(2^{r-i} - 2) for i <= r-2, and beta_{r-1,2r} = 1.
inline BettiTable boolean_band_betti(int r) {
  if (r < 2) throw BadRank("closed form needs rank at least 2");
  if (r > 40) throw TooLarge("rank too large for 64-bit Betti numbers");
  BettiTable t;
  for (int i = 0; i <= r - 2; ++i) t.add_graded(i, r + i, binomial(r, i) * ((1LL << (r - i)) - 2));
  t.add_graded(r - 1, 2 * r, 1);
  return t;
}

/// The elements other than bottom and top.
inline Subset interior(const Lattice& L) {
  Subset s = L.full_subset();
  s.reset(L.bottom());
  s.reset(L.top());
  return s;
}

/// Bipartite graph on x_0..x_{n-1} and y_0..y_{n-1}; adj[i] holds the j with {x_i, y_j} an edge.
struct BipartiteGraph {
  int n = 0;
  std::vector<Mask> adj;

  BipartiteGraph() = default;
  BipartiteGraph(int left, int right, const std::vector<std::pair<int, int>>& edges) : n(left), adj(left, 0) {
    if (left != right) throw SizeMismatch("both sides of the bipartite graph must have the same size");
    if (n > kMaskBits) throw TooLarge("bipartite graph too large");
    for (auto [i, j] : edges) {
      if (i < 0 || i >= n || j < 0 || j >= n) throw GroundSetMismatch("edge endpoint out of range");
      adj[i] |= bit(j);
    }
  }
  bool edge(int i, int j) const { return (adj[i] & bit(j)) != 0; }
  bool has_isolated_vertex() const {
    Mask right = 0;
    for (Mask a : adj) right |= a;
    return std::any_of(adj.begin(), adj.end(), [](Mask a) { return a == 0; }) || right != low_bits(n);
  }
};

/// Labeling that exhibits a Cohen-Macaulay bipartite graph: x_i is paired with
/// y_{partner[i]}, and {x_i, y_{partner[j]}} is an edge iff i <= j in `poset`.
struct CMBipartiteLabeling {
  Poset poset;
  std::vector<int> partner;
};

/// Searches the perfect matchings of the graph for one under which the edge
/// relation is a partial order. The identity matching is tried first.
inline std::optional<CMBipartiteLabeling> recognize_cm_bipartite(const BipartiteGraph& g, int cap = 10) {
  const int n = g.n;
  if (n > cap) throw TooLarge("bipartite recognition limited to " + std::to_string(cap) + " vertices per side");
  if (g.has_isolated_vertex()) throw PreconditionViolated("graph has an isolated vertex");
  std::vector<int> partner(n, -1);
  auto rel = [&](int i, int j) { return g.edge(i, partner[j]); };
  // Checks order axioms involving the newest assigned index k against indices < k.
  auto consistent = [&](int k) {
    for (int i = 0; i < k; ++i)
      if (rel(i, k) && rel(k, i)) return false;
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b) {
        if (a == b || !rel(a, b)) continue;
        for (int c = 0; c <= k; ++c)
          if (c != b && (a == k || b == k || c == k) && rel(b, c) && !rel(a, c)) return false;
      }
    return true;
  };
  bool identity = true;
  for (int i = 0; i < n; ++i) identity = identity && g.edge(i, i);
  auto search = [&](auto&& self, int k, Mask used) -> bool {
    if (k == n) return true;
    std::vector<int> choices;
    if (identity && !(used & bit(k))) choices.push_back(k);
    for_each_bit(g.adj[k] & ~used, [&](int j) {
      if (!(identity && j == k)) choices.push_back(j);
    });
    for (int j : choices) {
      partner[k] = j;
      if (consistent(k) && self(self, k + 1, used | bit(j))) return true;
    }
    partner[k] = -1;
    return false;
  };
  if (!search(search, 0, 0)) return std::nullopt;
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rel(i, j)) less.emplace_back(i, j);
  return CMBipartiteLabeling{Poset::from_relations(n, less), partner};
}

/// Outcome of recovering a lattice segment from a complex on V u V'.
struct UnmixedResult {
  CMBipartiteLabeling labeling;
  Lattice lattice;                ///< L(G) = J(P)
  std::optional<Subset> segment;  ///< set when the complex comes from a segment
  std::vector<Witness> witnesses;
  /// u_s for s in the segment, as vertex sets of the complex (x_i is vertex i,
  /// y_j is vertex n + j).
  std::vector<Mask> generator_supports;
};

/// Vertices 0..n-1 form V and n..2n-1 form V'. Requires the facets meeting
/// both sides to form a Cohen-Macaulay bipartite graph with no isolated
/// vertex (NotCMBipartiteBase otherwise). Returns the segment S of L(G) with
/// H*_S = I(complex) when every minimal vertex cover has size n and the
/// covers correspond to an interval-closed set, and witnesses otherwise.
inline UnmixedResult theorem_unmixed(const SimplicialComplex& d, std::size_t facet_cap = 4096) {
  if (d.num_vertices() % 2 != 0) throw SizeMismatch("vertex set must split into two halves of equal size");
  const int n = d.num_vertices() / 2;
  if (n == 0) throw NotCMBipartiteBase("empty vertex set");
  const Mask left = low_bits(n), right = low_bits(n) << n;
  std::vector<std::pair<int, int>> edges;
  for (Mask f : d.facets()) {
    if ((f & left) == 0 || (f & right) == 0) continue;
    if (popcount(f) != 2) throw NotCMBipartiteBase("a facet meeting both sides is not an edge");
    edges.emplace_back(lowest_bit(f & left), lowest_bit(f & right) - n);
  }
  const BipartiteGraph g(n, n, edges);
  if (g.has_isolated_vertex()) throw NotCMBipartiteBase("the mixed edges leave an isolated vertex");
  auto lab = recognize_cm_bipartite(g);
  if (!lab) throw NotCMBipartiteBase("the mixed edges do not form a Cohen-Macaulay bipartite graph");
  UnmixedResult res{*lab, lattice_of_ideals(lab->poset), std::nullopt, {}, {}};
  const Lattice& L = res.lattice;
  Subset s = L.empty_subset();
  for (Mask c : minimal_vertex_covers(d, facet_cap)) {
    if (popcount(c) != n) {
      res.witnesses.push_back({"minimal vertex cover of size " + std::to_string(popcount(c)) + " instead of " + std::to_string(n), bits_of(c)});
      continue;
    }
    const Mask xs = c & left;
    Mask expected_y = 0;
    for (int i = 0; i < n; ++i)
      if (!(xs & bit(i))) expected_y |= bit(n + lab->partner[i]);
    const int e = L.element_with_label(xs);
    if ((c & right) != expected_y || e < 0) {
      res.witnesses.push_back({"minimal vertex cover is not of the form x_I y_{P minus I} for a poset ideal I", bits_of(c)});
      continue;
    }
    s.set(e);
  }
  if (!res.witnesses.empty()) return res;
  const Subset closed = lattice_down_closure(L, s) & lattice_up_closure(L, s);
  if (closed != s) {
    const int gamma = static_cast<int>((closed & ~s).find_first());
    int xi = -1, delta = -1;
    for (int a : members_of(s))
      for (int b : members_of(s))
        if (xi < 0 && L.leq(a, gamma) && L.leq(gamma, b)) {
          xi = a;
          delta = b;
        }
    res.witnesses.push_back({"elements " + L.name(xi) + " < " + L.name(gamma) + " < " + L.name(delta) + " with the middle one missing", {xi, gamma, delta}});
    return res;
  }
  res.segment = s;
  for (int e : members_of(s)) {
    Mask u = 0;
    for (int i = 0; i < n; ++i) u |= (L.label(e) & bit(i)) ? bit(i) : bit(n + lab->partner[i]);
    res.generator_supports.push_back(u);
  }
  std::sort(res.generator_supports.begin(), res.generator_supports.end());
  return res;
}

/// A segment recovered from a complex on V u V', with x_i paired to y_i.
struct SegmentRecovery {
  Lattice lattice;
  Subset segment;
  bool via_theorem = false;  ///< false when found by the poset search
  std::vector<Mask> generator_supports;
};

/// Recovers a segment S with H*_S = I(complex). Uses theorem_unmixed when the
/// mixed edges form a Cohen-Macaulay bipartite graph without isolated vertices.
/// Otherwise every minimal vertex cover must read x_A y_{[n] minus A}, and the
/// partial orders on [n] under which all the sets A are ideals are searched
/// (most relations first) for one in which they form a segment of J(P).
/// Returns nullopt when no segment fits. The search covers n <= search_cap.
inline std::optional<SegmentRecovery> recover_segment(const SimplicialComplex& d, int search_cap = 5,
                                                      std::size_t facet_cap = 4096) {
  if (d.num_vertices() % 2 != 0) throw SizeMismatch("vertex set must split into two halves of equal size");
  const int n = d.num_vertices() / 2;
  try {
    UnmixedResult r = theorem_unmixed(d, facet_cap);
    if (!r.segment) return std::nullopt;
    return SegmentRecovery{std::move(r.lattice), *r.segment, true, std::move(r.generator_supports)};
  } catch (const NotCMBipartiteBase&) {
  }
  if (n > search_cap) throw TooLarge("poset search limited to " + std::to_string(search_cap) + " elements per side");
  const Mask left = low_bits(n);
  std::vector<Mask> sets;
  std::vector<Mask> covers = minimal_vertex_covers(d, facet_cap);
  for (Mask c : covers) {
    const Mask xs = c & left;
    if (c != (xs | ((left & ~xs) << n))) return std::nullopt;
    sets.push_back(xs);
  }
  if (sets.empty()) return std::nullopt;
  // q above p is allowed when every set containing q also contains p.
  std::vector<std::pair<int, int>> allowed;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q && std::all_of(sets.begin(), sets.end(), [&](Mask a) { return !(a & bit(q)) || (a & bit(p)); }))
        allowed.emplace_back(p, q);
  const std::size_t m = allowed.size();
  std::vector<std::uint64_t> choices;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) choices.push_back(sub);
  std::stable_sort(choices.begin(), choices.end(), [](std::uint64_t a, std::uint64_t b) { return popcount(a) > popcount(b); });
  for (std::uint64_t sub : choices) {
    std::vector<Mask> below(n, 0);
    for (std::size_t k = 0; k < m; ++k)
      if (sub >> k & 1) below[allowed[k].second] |= bit(allowed[k].first);
    bool order = true;
    for (int q = 0; q < n && order; ++q) {
      if (below[q] & bit(q)) order = false;
      for_each_bit(below[q], [&](int p) { order = order && is_subset(below[p], below[q]) && !(below[p] & bit(q)); });
    }
    if (!order) continue;
    std::vector<std::pair<int, int>> less;
    for (int q = 0; q < n; ++q) for_each_bit(below[q], [&](int p) { less.emplace_back(p, q); });
    Lattice L = lattice_of_ideals(Poset::from_relations(n, less));
    Subset s = L.empty_subset();
    for (Mask a : sets) s.set(L.element_with_label(a));
    if (!is_segment(s, L)) continue;
    std::sort(covers.begin(), covers.end());
    return SegmentRecovery{std::move(L), std::move(s), false, std::move(covers)};
  }
  return std::nullopt;
}

}  // namespace hibilab
