#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hibilab/betti.hpp"
#include "hibilab/bits.hpp"
#include "hibilab/errors.hpp"
#include "hibilab/lattice.hpp"
#include "hibilab/linalg.hpp"
#include "hibilab/monomial.hpp"

namespace hibilab {

/// Basis symbol b(p;S). The neighbor set S is stored through the
/// join-irreducibles it removes from p (for the dual complex, the ones its
/// members add to p), which identifies S uniquely.
struct BasisSymbol {
  int element = 0;
  Mask diff = 0;
  Mask multidegree = 0;
};

/// Nonzero entry sign * variable of a differential: the basis element `col`
/// of F_i contributes sign * variable * (basis element `row` of F_{i-1}).
/// A variable of -1 would denote a unit entry.
struct DifferentialEntry {
  int row = 0;
  int col = 0;
  int sign = 1;
  int variable = -1;
};

struct ResolutionComplex {
  VarSpace vars;
  bool dual = false;
  std::vector<int> order;  ///< linear extension of the join-irreducibles used for signs
  std::vector<std::vector<BasisSymbol>> terms;
  /// differentials[i] maps F_i to F_{i-1}; differentials[0] is empty.
  std::vector<std::vector<DifferentialEntry>> differentials;
  /// Labels of the resolved elements and of their lower neighbors (taken in
  /// the dual order for the dual complex), for the minimality criterion.
  std::vector<Mask> element_labels;
  std::vector<std::vector<Mask>> neighbor_labels;

  int length() const { return static_cast<int>(terms.size()) - 1; }
  std::vector<long long> ranks() const {
    std::vector<long long> out;
    for (const auto& t : terms) out.push_back(static_cast<long long>(t.size()));
    return out;
  }
  int index_of(int i, int element, Mask diff) const {
    if (i < 0 || i > length()) return -1;
    const auto& t = terms[i];
    auto it = std::lower_bound(t.begin(), t.end(), std::make_pair(element, diff), [](const BasisSymbol& b, const auto& key) {
      return std::make_pair(b.element, b.diff) < key;
    });
    return it != t.end() && it->element == element && it->diff == diff ? static_cast<int>(it - t.begin()) : -1;
  }
};

/// Longest-chain height of every element of P.
inline std::vector<int> poset_heights(const Poset& p) {
  std::vector<int> h(p.size(), 0);
  for (int a : p.topological_order())
    for (int b : p.upper_covers(a)) h[b] = std::max(h[b], h[a] + 1);
  return h;
}

inline bool is_linear_extension(const Poset& p, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != p.size()) return false;
  std::vector<int> pos(p.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= p.size() || pos[order[i]] >= 0) return false;
    pos[order[i]] = static_cast<int>(i);
  }
  for (const auto& [a, b] : p.covers())
    if (pos[a] > pos[b]) return false;
  return true;
}

/// P sorted by (height, index).
inline std::vector<int> default_linear_extension(const Poset& p) {
  const auto h = poset_heights(p);
  std::vector<int> out(p.size());
  for (int i = 0; i < p.size(); ++i) out[i] = i;
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) { return h[a] < h[b]; });
  return out;
}

/// P sorted by (height, descending index); differs from the default order
/// whenever two elements share a height.
inline std::vector<int> alternate_linear_extension(const Poset& p) {
  const auto h = poset_heights(p);
  std::vector<int> out(p.size());
  for (int i = 0; i < p.size(); ++i) out[i] = i;
  std::sort(out.begin(), out.end(), [&](int a, int b) { return h[a] != h[b] ? h[a] < h[b] : a > b; });
  return out;
}

namespace detail {

inline std::vector<int> positions(const std::vector<int>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

/// (-1)^{lambda(j; D)}, lambda counting members of D before j.
inline int sign_of(int j, Mask d, const std::vector<int>& pos) {
  int before = 0;
  for_each_bit(d, [&](int k) { before += pos[k] < pos[j] ? 1 : 0; });
  return before % 2 == 0 ? 1 : -1;
}

inline std::vector<int> checked_order(const Poset& p, std::optional<std::vector<int>> order) {
  std::vector<int> o = order ? std::move(*order) : default_linear_extension(p);
  if (!is_linear_extension(p, o)) throw PreconditionViolated("sign order is not a linear extension of the join-irreducibles");
  return o;
}

/// Fills terms from (element, maximal diff set, multidegree function) and
/// sorts them canonically.
template <typename Degree>
void fill_terms(ResolutionComplex& r, const std::vector<std::pair<int, Mask>>& tops, Degree degree) {
  int len = 0;
  for (const auto& [e, dmax] : tops) len = std::max(len, popcount(dmax));
  r.terms.assign(len + 1, {});
  for (const auto& [e, dmax] : tops)
    for_each_submask(dmax, [&, e = e](Mask d) { r.terms[popcount(d)].push_back({e, d, degree(e, d)}); });
  for (auto& t : r.terms)
    std::sort(t.begin(), t.end(), [](const BasisSymbol& a, const BasisSymbol& b) {
      return std::tie(a.element, a.diff) < std::tie(b.element, b.diff);
    });
  r.differentials.assign(len + 1, {});
}

}  // namespace detail

/// The resolution of H_sub for a meet-closed subset of a distributive
/// lattice, with basis b(p;S), S a set of lower neighbors of p inside the
/// subset, and differential
///   d b(p;S) = sum_{q in S} (-1)^{lambda(p\q; p\S)} (y_{p\q} b(p;S\q) - x_{p\q} b(q; q meet (S\q))).
/// Every lower neighbor inside the subset must differ from its upper element
/// by exactly one join-irreducible.
inline ResolutionComplex hhz_resolution(const Lattice& L, const Subset& sub, std::optional<std::vector<int>> order = std::nullopt,
                                        std::optional<VarSpace> vars = std::nullopt) {
  if (!is_distributive(L)) throw NotDistributive("the resolution needs a distributive lattice");
  if (sub.size() != static_cast<std::size_t>(L.size())) throw SizeMismatch("subset size differs from the lattice size");
  const Poset& P = L.irreducibles();
  const int n = P.size();
  ResolutionComplex r;
  r.vars = vars ? *vars : VarSpace::hibi_for(P);
  if (r.vars.hibi_rank() != n) throw GroundSetMismatch("Hibi ring does not match the lattice");
  r.order = detail::checked_order(P, std::move(order));
  const auto pos = detail::positions(r.order);
  const std::vector<int> els = members_of(sub);
  for (int a : els)
    for (int b : els)
      if (b > a && !sub.test(L.meet(a, b)))
        throw NotMeetClosed("meet of elements " + std::to_string(a) + " and " + std::to_string(b) + " is missing");
  // lower neighbors inside the subset
  std::vector<std::pair<int, Mask>> tops;
  for (int p : els) {
    Mask dmax = 0;
    std::vector<Mask> nb;
    for (int q : els) {
      if (!L.less(q, p)) continue;
      bool cover = true;
      for (int t : els)
        if (L.less(q, t) && L.less(t, p)) {
          cover = false;
          break;
        }
      if (!cover) continue;
      const Mask d = L.label(p) & ~L.label(q);
      if (popcount(d) != 1)
        throw PreconditionViolated("element " + std::to_string(q) + " is a lower neighbor of " + std::to_string(p) +
                                   " inside the subset but not a cover in the lattice");
      dmax |= d;
      nb.push_back(L.label(q));
    }
    tops.emplace_back(p, dmax);
    r.element_labels.push_back(L.label(p));
    r.neighbor_labels.push_back(std::move(nb));
  }
  const Mask full = low_bits(n);
  const VarSpace& v = r.vars;
  detail::fill_terms(r, tops, [&](int e, Mask d) { return v.make(L.label(e), (full & ~L.label(e)) | d); });
  for (int i = 1; i <= r.length(); ++i) {
    for (int c = 0; c < static_cast<int>(r.terms[i].size()); ++c) {
      const BasisSymbol b = r.terms[i][c];
      for_each_bit(b.diff, [&](int j) {
        const int s = detail::sign_of(j, b.diff, pos);
        const int same = r.index_of(i - 1, b.element, b.diff & ~bit(j));
        const int q = L.element_with_label(L.label(b.element) & ~bit(j));
        const int lower = q < 0 ? -1 : r.index_of(i - 1, q, b.diff & ~bit(j));
        if (same < 0 || lower < 0) throw CrosscheckFailure("differential target missing from the basis");
        r.differentials[i].push_back({same, c, s, v.y(j)});
        r.differentials[i].push_back({lower, c, -s, v.x(j)});
      });
    }
  }
  return r;
}

inline ResolutionComplex hhz_resolution(const Lattice& L, std::optional<std::vector<int>> order = std::nullopt) {
  return hhz_resolution(L, L.full_subset(), std::move(order));
}

/// The resolution of H of the dual lattice (generators x_{P\l(r)} y_{l(r)}),
/// with basis b~(r;T), T a set of upper neighbors of r, and differential
///   d b~(r;T) = sum_{s in T} (-1)^{lambda(s\r; T\r)} (y_{s\r} b~(r;T\s) - x_{s\r} b~(s; s join (T\s))).
inline ResolutionComplex dual_resolution(const Lattice& L, std::optional<std::vector<int>> order = std::nullopt) {
  if (!is_distributive(L)) throw NotDistributive("the dual resolution needs a distributive lattice");
  const Poset& P = L.irreducibles();
  const int n = P.size();
  const Mask full = low_bits(n);
  ResolutionComplex r;
  r.dual = true;
  r.vars = VarSpace::hibi_for(P);
  r.order = detail::checked_order(P, std::move(order));
  const auto pos = detail::positions(r.order);
  std::vector<std::pair<int, Mask>> tops;
  for (int e = 0; e < L.size(); ++e) {
    Mask dmax = 0;
    std::vector<Mask> nb;
    for (int s : L.upper_covers(e)) {
      dmax |= L.label(s) & ~L.label(e);
      nb.push_back(full & ~L.label(s));
    }
    tops.emplace_back(e, dmax);
    r.element_labels.push_back(full & ~L.label(e));
    r.neighbor_labels.push_back(std::move(nb));
  }
  const VarSpace& v = r.vars;
  detail::fill_terms(r, tops, [&](int e, Mask d) { return v.make(full & ~L.label(e), L.label(e) | d); });
  for (int i = 1; i <= r.length(); ++i) {
    for (int c = 0; c < static_cast<int>(r.terms[i].size()); ++c) {
      const BasisSymbol b = r.terms[i][c];
      for_each_bit(b.diff, [&](int j) {
        const int sg = detail::sign_of(j, b.diff, pos);
        const int same = r.index_of(i - 1, b.element, b.diff & ~bit(j));
        const int up = L.element_with_label(L.label(b.element) | bit(j));
        const int upper = up < 0 ? -1 : r.index_of(i - 1, up, b.diff & ~bit(j));
        if (same < 0 || upper < 0) throw CrosscheckFailure("differential target missing from the basis");
        r.differentials[i].push_back({same, c, sg, v.y(j)});
        r.differentials[i].push_back({upper, c, -sg, v.x(j)});
      });
    }
  }
  return r;
}

namespace detail {

inline std::vector<std::vector<DifferentialEntry>> by_column(const std::vector<DifferentialEntry>& d, std::size_t cols) {
  std::vector<std::vector<DifferentialEntry>> out(cols);
  for (const auto& e : d) out[e.col].push_back(e);
  return out;
}

}  // namespace detail

/// Composes consecutive differentials symbolically and checks every
/// coefficient of the product vanishes.
inline bool differential_squares_to_zero(const ResolutionComplex& r) {
  for (int i = 2; i <= r.length(); ++i) {
    const auto lower = detail::by_column(r.differentials[i - 1], r.terms[i - 1].size());
    std::map<std::tuple<int, int, int, int>, long long> acc;
    for (const auto& e : r.differentials[i])
      for (const auto& f : lower[e.row]) {
        const int a = std::min(e.variable, f.variable), b = std::max(e.variable, f.variable);
        acc[{f.row, e.col, a, b}] += e.sign * f.sign;
      }
    for (const auto& [k, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

/// Every entry is a variable linking multidegrees: deg(row) * variable = deg(col).
inline bool is_homogeneous(const ResolutionComplex& r) {
  for (int i = 1; i <= r.length(); ++i)
    for (const auto& e : r.differentials[i]) {
      const Mask src = r.terms[i][e.col].multidegree, dst = r.terms[i - 1][e.row].multidegree;
      const Mask var = e.variable < 0 ? 0 : bit(e.variable);
      if ((dst & var) != 0 || (dst | var) != src) return false;
    }
  return true;
}

/// Minimality criterion: for every element p and proper subset S of its lower
/// neighbors, meet(S) is strictly above meet(N(p)) (the meet of the empty set
/// is p itself). Cross-checked against the absence of unit entries.
inline bool is_minimal(const ResolutionComplex& r) {
  bool criterion = true;
  for (std::size_t k = 0; k < r.element_labels.size() && criterion; ++k) {
    const auto& nb = r.neighbor_labels[k];
    if (nb.size() > 20) throw TooLarge("too many lower neighbors for the minimality scan");
    Mask all_meet = r.element_labels[k];
    for (Mask m : nb) all_meet &= m;
    const Mask full = low_bits(static_cast<int>(nb.size()));
    for (Mask s = 0; s < full && criterion; ++s) {
      Mask m = r.element_labels[k];
      for_each_bit(s, [&](int t) { m &= nb[t]; });
      if (m == all_meet) criterion = false;
    }
  }
  bool no_units = true;
  for (const auto& d : r.differentials)
    for (const auto& e : d)
      if (e.variable < 0) no_units = false;
  if (criterion != no_units) throw CrosscheckFailure("minimality criterion disagrees with the unit-entry scan");
  return criterion;
}

/// beta_{i,m} = number of basis elements of F_i with multidegree m.
inline BettiTable betti_from_resolution(const ResolutionComplex& r) {
  if (!is_minimal(r)) throw NotMinimal("the resolution is not minimal; use the oracle instead");
  BettiTable t;
  for (int i = 0; i <= r.length(); ++i)
    for (const auto& b : r.terms[i]) t.add(i, b.multidegree, 1);
  return t;
}

/// Verifies that `r` resolves `ideal`: d^2 = 0, homogeneous entries, F_0
/// matching the generators, and in every multidegree m of the lcm closure the
/// strand is exact with cokernel of dimension one (the monomial m of the
/// ideal). Strands outside the closure coincide with strands inside it.
inline bool exactness_check(const ResolutionComplex& r, const MonomialIdeal& ideal, Field field = Field::rationals) {
  if (r.vars.size() > 20) throw TooLarge("exactness check limited to 20 variables");
  if (!differential_squares_to_zero(r) || !is_homogeneous(r)) return false;
  std::vector<Mask> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g.support());
  std::vector<Mask> f0;
  if (!r.terms.empty())
    for (const auto& b : r.terms[0]) f0.push_back(b.multidegree);
  std::sort(gens.begin(), gens.end());
  std::sort(f0.begin(), f0.end());
  if (gens != f0) return false;
  if (gens.empty()) return true;
  const auto closure = lcm_closure(gens);
  const std::set<Mask> closure_set(closure.begin(), closure.end());
  for (const auto& t : r.terms)
    for (const auto& b : t)
      if (!closure_set.count(b.multidegree)) return false;
  const int len = r.length();
  for (Mask m : closure) {
    // strand indices per level
    std::vector<std::vector<int>> idx(len + 1);
    std::vector<std::vector<int>> where(len + 1);
    for (int i = 0; i <= len; ++i) {
      where[i].assign(r.terms[i].size(), -1);
      for (std::size_t k = 0; k < r.terms[i].size(); ++k)
        if (is_subset(r.terms[i][k].multidegree, m)) {
          where[i][k] = static_cast<int>(idx[i].size());
          idx[i].push_back(static_cast<int>(k));
        }
    }
    std::vector<int> rank(len + 2, 0);
    for (int i = 1; i <= len; ++i) {
      if (idx[i].empty() || idx[i - 1].empty()) continue;
      IntMatrix mat(static_cast<int>(idx[i - 1].size()), static_cast<int>(idx[i].size()));
      for (const auto& e : r.differentials[i]) {
        const int c = where[i][e.col], row = where[i - 1][e.row];
        if (c >= 0 && row >= 0) mat.at(row, c) += e.sign;
      }
      rank[i] = matrix_rank(mat, field);
    }
    if (static_cast<long long>(idx[0].size()) - rank[1] != 1) return false;
    for (int i = 1; i <= len; ++i)
      if (static_cast<long long>(idx[i].size()) - rank[i] - rank[i + 1] != 0) return false;
  }
  return true;
}

/// The comparison map from the x/y-swapped dual resolution to the
/// resolution of H_L: b~(r;T) goes to (-1)^{|T|} b(join T; lower neighbors of
/// join T in [r, join T]).
struct ComparisonMap {
  /// image[i][k] = (index in F_i, sign) of the k-th dual basis element, or (-1, 0).
  std::vector<std::vector<std::pair<int, int>>> image;
  bool degrees_match = true;
  bool bijective = true;
  bool chain_map = true;
  bool ok() const { return degrees_match && bijective && chain_map; }
};

inline ComparisonMap comparison_map(const Lattice& L, const ResolutionComplex& f, const ResolutionComplex& fd) {
  ComparisonMap out;
  const VarSpace& v = f.vars;
  const int n = v.hibi_rank();
  if (f.length() != fd.length()) out.bijective = false;
  const int len = std::min(f.length(), fd.length());
  out.image.resize(fd.length() + 1);
  for (int i = 0; i <= fd.length(); ++i) {
    std::vector<int> hit(i <= f.length() ? f.terms[i].size() : 0, 0);
    for (const auto& b : fd.terms[i]) {
      const int p = L.element_with_label(L.label(b.element) | b.diff);
      const int k = (p < 0 || i > len) ? -1 : f.index_of(i, p, b.diff);
      out.image[i].emplace_back(k, k < 0 ? 0 : (i % 2 == 0 ? 1 : -1));
      if (k < 0) {
        out.bijective = false;
        continue;
      }
      ++hit[k];
      if (v.swap_xy(b.multidegree) != f.terms[i][k].multidegree) out.degrees_match = false;
    }
    for (int h : hit)
      if (h != 1) out.bijective = false;
  }
  if (!out.bijective) {
    out.chain_map = false;
    return out;
  }
  auto swap_var = [n](int var) { return var < n ? var + n : var - n; };
  for (int i = 1; i <= len; ++i) {
    const auto fcols = detail::by_column(f.differentials[i], f.terms[i].size());
    const auto dcols = detail::by_column(fd.differentials[i], fd.terms[i].size());
    for (std::size_t c = 0; c < fd.terms[i].size(); ++c) {
      std::map<std::pair<int, int>, long long> lhs, rhs;
      const auto [tc, sc] = out.image[i][c];
      for (const auto& e : fcols[tc]) lhs[{e.row, e.variable}] += static_cast<long long>(sc) * e.sign;
      for (const auto& e : dcols[c]) {
        const auto [tr, sr] = out.image[i - 1][e.row];
        rhs[{tr, swap_var(e.variable)}] += static_cast<long long>(sr) * e.sign;
      }
      std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
      std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
      if (lhs != rhs) out.chain_map = false;
    }
  }
  return out;
}

inline ComparisonMap iso_pi(const Lattice& L, std::optional<std::vector<int>> order = std::nullopt) {
  if (!is_distributive(L)) throw NotDistributive("the comparison map needs a distributive lattice");
  const auto f = hhz_resolution(L, order);
  const auto fd = dual_resolution(L, order);
  return comparison_map(L, f, fd);
}

/// Checks, for every p and nonempty set S of lower neighbors, that with
/// r = meet(S) and T the upper neighbors of r below p: |T| = |S|, join(T) = p,
/// the two lcms agree, and no other (r', T') reaches the same lcm. Returns a
/// description of the first failure.
inline std::optional<std::string> lcm_law_violation(const Lattice& L) {
  const VarSpace v = VarSpace::hibi_for(L.irreducibles());
  const Mask full = low_bits(L.irreducibles().size());
  auto u = [&](int e) { return v.make(L.label(e), full & ~L.label(e)); };
  std::map<Mask, std::pair<int, Mask>> by_degree;  // lcm over (r, T) -> (r, T as added labels)
  for (int r = 0; r < L.size(); ++r) {
    const auto up = L.upper_covers(r);
    const int k = static_cast<int>(up.size());
    for (Mask t = 0; t <= low_bits(k); ++t) {
      Mask m = u(r), added = 0;
      for_each_bit(t, [&](int i) {
        m |= u(up[i]);
        added |= L.label(up[i]) & ~L.label(r);
      });
      if (!by_degree.emplace(m, std::make_pair(r, added)).second)
        return "two pairs (r,T) share the lcm " + std::to_string(m);
      if (t == low_bits(k)) break;
    }
  }
  for (int p = 0; p < L.size(); ++p) {
    const auto low = L.lower_covers(p);
    const int k = static_cast<int>(low.size());
    for (Mask s = 1; s <= low_bits(k) && k > 0; ++s) {
      std::vector<int> S;
      Mask m = u(p);
      for_each_bit(s, [&](int i) {
        S.push_back(low[i]);
        m |= u(low[i]);
      });
      const int r = L.meet_of(S, p);
      std::vector<int> T;
      for (int t : L.upper_covers(r))
        if (L.leq(t, p)) T.push_back(t);
      if (T.size() != S.size()) return "|T| != |S| at element " + std::to_string(p);
      if (L.join_of(T, r) != p) return "join of T differs from p at element " + std::to_string(p);
      Mask mt = u(r);
      for (int t : T) mt |= u(t);
      if (mt != m) return "lcm mismatch at element " + std::to_string(p);
      auto it = by_degree.find(m);
      if (it == by_degree.end() || it->second.first != r) return "lcm not uniquely attained at element " + std::to_string(p);
      if (s == low_bits(k)) break;
    }
  }
  return std::nullopt;
}

/// JSON dump of terms and differentials.
inline nlohmann::json to_json(const ResolutionComplex& r, const Lattice& L) {
  nlohmann::json j;
  j["dual"] = r.dual;
  j["order"] = r.order;
  j["terms"] = nlohmann::json::array();
  for (int i = 0; i <= r.length(); ++i) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : r.terms[i]) {
      std::vector<std::string> diff;
      for_each_bit(b.diff, [&](int p) { diff.push_back(L.irreducibles().name(p)); });
      basis.push_back({{"element", L.name(b.element)},
                       {"removed", diff},
                       {"multidegree", to_string(SquarefreeMonomial{b.multidegree}, r.vars)}});
    }
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.differentials[i])
      entries.push_back({{"row", e.row}, {"col", e.col}, {"sign", e.sign}, {"variable", e.variable < 0 ? std::string("1") : r.vars.name(e.variable)}});
    j["terms"].push_back({{"i", i}, {"basis", basis}, {"differential", entries}});
  }
  return j;
}

}  // namespace hibilab
