#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hibilab/bits.hpp"
#include "hibilab/errors.hpp"
#include "hibilab/poset.hpp"

namespace hibilab {

/// Finite lattice whose elements are identified by their canonical labels
/// l(p) = {join-irreducibles below p}.
///
/// Elements are indexed 0..size()-1 in increasing (|l(p)|, l(p)) order, which
/// is always a linear extension of the lattice order. Comparison and meets are
/// read off the labels (s <= t iff l(s) is a subset of l(t), and
/// l(s meet t) = l(s) & l(t)); joins are label unions for distributive
/// lattices and a first-upper-bound scan otherwise.
class Lattice {
 public:
  int size() const { return static_cast<int>(labels_.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  Mask label(int e) const { return labels_[e]; }
  const std::vector<Mask>& labels() const { return labels_; }
  /// Element whose label is `m`, or -1.
  int element_with_label(Mask m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }

  bool leq(int a, int b) const { return is_subset(labels_[a], labels_[b]); }
  bool less(int a, int b) const { return a != b && leq(a, b); }

  int meet(int a, int b) const { return index_.at(labels_[a] & labels_[b]); }
  int join(int a, int b) const {
    const Mask u = labels_[a] | labels_[b];
    if (int e = element_with_label(u); e >= 0) return e;
    for (int e = std::max(a, b); e < size(); ++e)
      if (is_subset(u, labels_[e])) return e;
    return top();
  }
  /// Meet of a set of elements; the meet of the empty set is `empty_value`.
  int meet_of(std::span<const int> els, int empty_value) const {
    if (els.empty()) return empty_value;
    int m = els.front();
    for (int e : els.subspan(1)) m = meet(m, e);
    return m;
  }
  int join_of(std::span<const int> els, int empty_value) const {
    if (els.empty()) return empty_value;
    int m = els.front();
    for (int e : els.subspan(1)) m = join(m, e);
    return m;
  }

  std::span<const int> lower_covers(int e) const {
    return {lower_data_.data() + lower_off_[e], lower_data_.data() + lower_off_[e + 1]};
  }
  std::span<const int> upper_covers(int e) const {
    return {upper_data_.data() + upper_off_[e], upper_data_.data() + upper_off_[e + 1]};
  }
  bool covers(int lower, int upper) const {
    auto lc = lower_covers(upper);
    return std::find(lc.begin(), lc.end(), lower) != lc.end();
  }

  /// The join-irreducible subposet P; label bit i refers to element i of P.
  const Poset& irreducibles() const { return irreducibles_; }
  /// Lattice element corresponding to element p of P.
  int irreducible_element(int p) const { return irreducible_element_[p]; }

  const std::string& name(int e) const { return names_[e]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of element `e` in the poset or file this lattice was built from.
  int source_index(int e) const { return source_index_.empty() ? e : source_index_[e]; }
  int from_source_index(int s) const {
    if (source_index_.empty()) return s;
    auto it = std::find(source_index_.begin(), source_index_.end(), s);
    return it == source_index_.end() ? -1 : static_cast<int>(it - source_index_.begin());
  }

  bool built_as_ideal_lattice() const { return ideal_lattice_; }

  const std::optional<std::vector<int>>& ranks() const { return ranks_; }
  bool is_graded() const { return ranks_.has_value(); }
  int rank_of(int e) const {
    if (!ranks_) throw BadRank("lattice is not graded");
    return (*ranks_)[e];
  }
  int rank() const { return rank_of(top()); }

  /// The lattice order as a Poset (elements in this lattice's indexing).
  Poset order(std::size_t cap = 4096) const {
    if (static_cast<std::size_t>(size()) > cap) throw TooLarge("lattice too large to materialize as a poset");
    std::vector<std::pair<int, int>> cov;
    for (int e = 0; e < size(); ++e)
      for (int l : lower_covers(e)) cov.emplace_back(l, e);
    return Poset(size(), std::move(cov), names_);
  }

  Subset empty_subset() const { return Subset(static_cast<std::size_t>(size())); }
  Subset full_subset() const { return ~empty_subset(); }

  /// J(P): all poset ideals of P ordered by inclusion.
  friend Lattice lattice_of_ideals(const Poset& p, std::size_t cap);
  /// Lattice from an explicit order; throws NotALattice.
  friend Lattice build_lattice(const Poset& order);

 private:
  Lattice() = default;

  void finish(const std::vector<std::vector<int>>& lower) {
    const int n = size();
    std::vector<std::vector<int>> upper(n);
    for (int e = 0; e < n; ++e)
      for (int l : lower[e]) upper[l].push_back(e);
    auto pack = [n](const std::vector<std::vector<int>>& adj, std::vector<int>& off, std::vector<int>& data) {
      off.assign(n + 1, 0);
      for (int e = 0; e < n; ++e) off[e + 1] = off[e] + static_cast<int>(adj[e].size());
      data.clear();
      data.reserve(off[n]);
      for (int e = 0; e < n; ++e) {
        std::vector<int> row = adj[e];
        std::sort(row.begin(), row.end());
        data.insert(data.end(), row.begin(), row.end());
      }
    };
    pack(lower, lower_off_, lower_data_);
    pack(upper, upper_off_, upper_data_);
    index_.clear();
    index_.reserve(labels_.size());
    for (int e = 0; e < n; ++e) index_.emplace(labels_[e], e);
    // Heights along covers; graded iff every cover adds exactly one and the
    // unique maximal element is reached.
    std::vector<int> h(n, 0);
    bool graded = true;
    for (int e = 0; e < n; ++e)
      for (int l : lower_covers(e)) h[e] = std::max(h[e], h[l] + 1);
    for (int e = 0; e < n && graded; ++e)
      for (int l : lower_covers(e))
        if (h[e] != h[l] + 1) graded = false;
    if (graded) ranks_ = std::move(h);
  }

  std::vector<Mask> labels_;
  std::unordered_map<Mask, int> index_;
  std::vector<int> lower_off_, lower_data_, upper_off_, upper_data_;
  Poset irreducibles_;
  std::vector<int> irreducible_element_;
  std::vector<std::string> names_;
  std::vector<int> source_index_;
  std::optional<std::vector<int>> ranks_;
  bool ideal_lattice_ = false;
};

/// Display name of a label over P: concatenated single-character names
/// ("abc"), or a braced list when names are longer; the empty label is "{}".
inline std::string label_name(const Poset& p, Mask label) {
  bool short_names = true;
  for (int i = 0; i < p.size(); ++i) short_names = short_names && p.name(i).size() == 1;
  if (label == 0) return "{}";
  std::string out;
  for (int i : bits_of(label)) {
    if (!short_names && !out.empty()) out += ",";
    out += p.name(i);
  }
  return short_names ? out : "{" + out + "}";
}

inline Lattice lattice_of_ideals(const Poset& p, std::size_t cap = enumeration_cap()) {
  Lattice L;
  L.labels_ = poset_ideal_masks(p, cap);
  L.irreducibles_ = p;
  L.ideal_lattice_ = true;
  const int n = static_cast<int>(L.labels_.size());
  std::unordered_map<Mask, int> idx;
  for (int e = 0; e < n; ++e) idx.emplace(L.labels_[e], e);
  std::vector<std::vector<int>> lower(n);
  for (int e = 0; e < n; ++e) {
    const Mask ideal = L.labels_[e];
    for_each_bit(ideal, [&](int a) {
      const auto& up = p.upper_covers(a);
      if (std::none_of(up.begin(), up.end(), [&](int b) { return (ideal & bit(b)) != 0; }))
        lower[e].push_back(idx.at(ideal & ~bit(a)));
    });
  }
  for (int a = 0; a < p.size(); ++a) L.irreducible_element_.push_back(idx.at(mask_from_subset(p.down_set(a))));
  for (Mask m : L.labels_) L.names_.push_back(label_name(p, m));
  L.finish(lower);
  return L;
}

inline Lattice build_lattice(const Poset& order) {
  const int n = order.size();
  if (n == 0) throw NotALattice(-1, -1, "(empty poset has no bottom element)");
  auto mins = order.minimal_elements();
  auto maxs = order.maximal_elements();
  if (mins.size() != 1) throw NotALattice(mins[0], mins[1], "have no meet (no unique minimum)");
  if (maxs.size() != 1) throw NotALattice(maxs[0], maxs[1], "have no join (no unique maximum)");
  std::vector<std::size_t> down_count(n), up_count(n);
  for (int a = 0; a < n; ++a) {
    down_count[a] = order.down_set(a).count();
    up_count[a] = order.up_set(a).count();
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (order.comparable(a, b)) continue;
      const Subset lb = order.down_set(a) & order.down_set(b);
      const Subset ub = order.up_set(a) & order.up_set(b);
      bool has_meet = false, has_join = false;
      for (int m : members_of(lb))
        if (down_count[m] == lb.count() && order.down_set(m) == lb) has_meet = true;
      for (int m : members_of(ub))
        if (up_count[m] == ub.count() && order.up_set(m) == ub) has_join = true;
      if (!has_meet) throw NotALattice(a, b, "have no greatest lower bound");
      if (!has_join) throw NotALattice(a, b, "have no least upper bound");
    }
  }
  std::vector<int> irr;
  for (int a = 0; a < n; ++a)
    if (order.lower_covers(a).size() == 1) irr.push_back(a);
  if (irr.size() > static_cast<std::size_t>(kMaskBits))
    throw TooLarge("lattice has more than 64 join-irreducible elements");
  std::vector<Mask> raw(n, 0);
  for (int a = 0; a < n; ++a)
    for (std::size_t i = 0; i < irr.size(); ++i)
      if (order.leq(irr[i], a)) raw[a] |= bit(static_cast<int>(i));

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    return popcount(raw[x]) != popcount(raw[y]) ? popcount(raw[x]) < popcount(raw[y]) : raw[x] < raw[y];
  });
  std::vector<int> inverse(n);
  for (int i = 0; i < n; ++i) inverse[perm[i]] = i;

  Lattice L;
  L.source_index_ = perm;
  for (int i = 0; i < n; ++i) {
    L.labels_.push_back(raw[perm[i]]);
    L.names_.push_back(order.name(perm[i]));
  }
  for (std::size_t i = 1; i < L.labels_.size(); ++i)
    if (L.labels_[i] == L.labels_[i - 1]) throw NotALattice(perm[i - 1], perm[i], "share a canonical label");
  auto sub = induced_subposet(order, irr);
  L.irreducibles_ = sub.poset;
  for (int a : irr) L.irreducible_element_.push_back(inverse[a]);
  std::vector<std::vector<int>> lower(n);
  for (auto [a, b] : order.covers()) lower[inverse[b]].push_back(inverse[a]);
  L.finish(lower);
  return L;
}

/// B_r: the lattice of all subsets of an r-element antichain.
inline Lattice boolean_lattice(int r) {
  if (r < 0) throw BadRange("negative Boolean rank");
  if (r > 20) throw TooLarge("Boolean lattices are limited to rank 20");
  return lattice_of_ideals(Poset::antichain(r), (std::size_t{1} << r) + 1);
}

/// Distributivity via Birkhoff: the canonical embedding into J(P) is always
/// injective, so it is bijective exactly when |L| = |J(P)|.
inline bool is_distributive(const Lattice& L) {
  if (L.built_as_ideal_lattice()) return true;
  try {
    return poset_ideal_masks(L.irreducibles(), static_cast<std::size_t>(L.size()) + 1).size() ==
           static_cast<std::size_t>(L.size());
  } catch (const TooLarge&) {
    return false;
  }
}

/// Direct check of a meet (b join c) = (a meet b) join (a meet c) over all triples.
inline bool satisfies_distributive_law(const Lattice& L) {
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      for (int c = 0; c < L.size(); ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

/// Upper semimodularity: whenever a and b both cover a meet b, a join b covers
/// both. When the lattice is graded the rank inequality is evaluated as well
/// and must agree.
inline bool is_upper_semimodular(const Lattice& L) {
  bool covering = true;
  for (int m = 0; m < L.size() && covering; ++m) {
    auto up = L.upper_covers(m);
    for (std::size_t i = 0; i < up.size() && covering; ++i)
      for (std::size_t j = i + 1; j < up.size() && covering; ++j) {
        const int a = up[i], b = up[j];
        if (L.meet(a, b) != m) continue;
        const int c = L.join(a, b);
        covering = L.covers(a, c) && L.covers(b, c);
      }
  }
  if (L.is_graded()) {
    bool inequality = true;
    for (int a = 0; a < L.size() && inequality; ++a)
      for (int b = 0; b < L.size() && inequality; ++b)
        inequality = L.rank_of(a) + L.rank_of(b) >= L.rank_of(L.meet(a, b)) + L.rank_of(L.join(a, b));
    if (inequality != covering) throw CrosscheckFailure("semimodularity conditions disagree on a graded lattice");
  }
  return covering;
}

struct Birkhoff {
  Poset irreducibles;        ///< P
  std::vector<Mask> labels;  ///< l(p) for each lattice element, over P
};

inline Birkhoff birkhoff(const Lattice& L) { return {L.irreducibles(), L.labels()}; }

struct DualLattice {
  Lattice lattice;       ///< J(dual P), labels P \ l(q)
  std::vector<int> iso;  ///< element q of L -> its element in the dual
};

inline DualLattice dual_lattice(const Lattice& L) {
  if (!is_distributive(L)) throw NotDistributive("dual_lattice requires a distributive lattice");
  Lattice d = lattice_of_ideals(dual_poset(L.irreducibles()), static_cast<std::size_t>(L.size()) + 1);
  const Mask full = low_bits(L.irreducibles().size());
  std::vector<int> iso(L.size());
  for (int e = 0; e < L.size(); ++e) iso[e] = d.element_with_label(full & ~L.label(e));
  return {std::move(d), std::move(iso)};
}

/// Down-closure of a set of lattice elements.
inline Subset lattice_down_closure(const Lattice& L, const Subset& s) {
  Subset out = L.empty_subset();
  const auto els = members_of(s);
  for (int x = 0; x < L.size(); ++x)
    for (int e : els)
      if (L.leq(x, e)) {
        out.set(x);
        break;
      }
  return out;
}

inline Subset lattice_up_closure(const Lattice& L, const Subset& s) {
  Subset out = L.empty_subset();
  const auto els = members_of(s);
  for (int x = 0; x < L.size(); ++x)
    for (int e : els)
      if (L.leq(e, x)) {
        out.set(x);
        break;
      }
  return out;
}

inline bool is_lattice_ideal(const Lattice& L, const Subset& s) {
  for (int e = 0; e < L.size(); ++e)
    if (s.test(e))
      for (int l : L.lower_covers(e))
        if (!s.test(l)) return false;
  return true;
}

inline bool is_lattice_coideal(const Lattice& L, const Subset& s) {
  for (int e = 0; e < L.size(); ++e)
    if (s.test(e))
      for (int u : L.upper_covers(e))
        if (!s.test(u)) return false;
  return true;
}

/// Interval-closed: p <= q in S implies [p, q] in S. Decided as S = down(S) & up(S).
inline bool is_segment(const Subset& s, const Lattice& L) {
  return (lattice_down_closure(L, s) & lattice_up_closure(L, s)) == s;
}

struct IdealCoidealPair {
  Subset ideal;
  Subset coideal;
};

/// The smallest poset ideal and coideal whose intersection is the segment.
inline IdealCoidealPair segment_hull(const Subset& s, const Lattice& L) {
  IdealCoidealPair hull{lattice_down_closure(L, s), lattice_up_closure(L, s)};
  if ((hull.ideal & hull.coideal) != s) throw NotASegment("subset is not interval-closed");
  return hull;
}

struct RankBand {
  Subset band;     ///< {p : i <= rank p <= j}
  Subset ideal;    ///< {p : rank p <= j}
  Subset coideal;  ///< {p : rank p >= i}
};

inline RankBand rank_band(const Lattice& L, int i, int j) {
  if (!L.is_graded()) throw BadRange("rank bands need a graded lattice");
  if (i < 0 || i > j || j > L.rank())
    throw BadRange("rank band [" + std::to_string(i) + ", " + std::to_string(j) + "] outside 0.." +
                   std::to_string(L.rank()));
  RankBand rb{L.empty_subset(), L.empty_subset(), L.empty_subset()};
  for (int e = 0; e < L.size(); ++e) {
    const int r = L.rank_of(e);
    if (r <= j) rb.ideal.set(e);
    if (r >= i) rb.coideal.set(e);
  }
  rb.band = rb.ideal & rb.coideal;
  return rb;
}

/// The hypothesis the planar-lattice corollary relies on: no element has more
/// than two lower neighbors.
inline bool at_most_two_lower_neighbors(const Lattice& L) {
  for (int e = 0; e < L.size(); ++e)
    if (L.lower_covers(e).size() > 2) return false;
  return true;
}

/// A Boolean lattice is one where the meet of the lower neighbors of the top is the bottom.
inline bool is_boolean(const Lattice& L) {
  auto lc = L.lower_covers(L.top());
  return L.meet_of(lc, L.top()) == L.bottom() && is_distributive(L);
}

}  // namespace hibilab
