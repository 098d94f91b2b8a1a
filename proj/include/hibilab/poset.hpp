#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hibilab/bits.hpp"
#include "hibilab/errors.hpp"

namespace hibilab {

/// Default bound on enumeration output (ideals, lattice elements). The
/// environment variable HIBILAB_CAP overrides it.
inline std::size_t enumeration_cap() {
  if (const char* env = std::getenv("HIBILAB_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 20;
}

/// Finite poset on the dense elements 0..n-1, stored by its cover relation.
///
/// The reachability relation is materialized as one down-set and one up-set
/// bitset per element, so memory is quadratic in n. Values are immutable after
/// construction.
class Poset {
 public:
  Poset() = default;

  /// `covers` holds pairs (a, b) meaning b covers a. Throws InvalidPoset when
  /// the pairs contain a cycle, a self-loop, an out-of-range element, or an
  /// edge implied by a longer path (not a Hasse diagram).
  Poset(int n, std::vector<std::pair<int, int>> covers, std::vector<std::string> names = {})
      : n_(n), covers_(std::move(covers)), names_(std::move(names)) {
    if (n_ < 0) throw InvalidPoset("negative poset size");
    if (!names_.empty() && static_cast<int>(names_.size()) != n_)
      throw InvalidPoset("name table size does not match element count");
    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
    lower_.assign(n_, {});
    upper_.assign(n_, {});
    for (auto [a, b] : covers_) {
      if (a < 0 || b < 0 || a >= n_ || b >= n_) throw InvalidPoset("cover references unknown element");
      if (a == b) throw InvalidPoset("self-loop on element " + std::to_string(a));
      upper_[a].push_back(b);
      lower_[b].push_back(a);
    }
    build_closure();
    for (auto [a, b] : covers_) {
      for (int c : lower_[b]) {
        if (c != a && leq(a, c))
          throw InvalidPoset("edge " + std::to_string(a) + " < " + std::to_string(b) + " is implied by " +
                             std::to_string(a) + " <= " + std::to_string(c) + " < " + std::to_string(b));
      }
    }
  }

  /// Builds a poset from an arbitrary strict relation list; the cover
  /// relation is its transitive reduction. Pairs already implied by others are
  /// reported in `shortcuts` when given.
  static Poset from_relations(int n, const std::vector<std::pair<int, int>>& less_than,
                              std::vector<std::string> names = {},
                              std::vector<std::pair<int, int>>* shortcuts = nullptr) {
    std::vector<Subset> reach(n, Subset(n));
    for (auto [a, b] : less_than) {
      if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidPoset("relation references unknown element");
      if (a == b) throw InvalidPoset("self-loop on element " + std::to_string(a));
      reach[a].set(b);
    }
    // Warshall closure over bitset rows.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (reach[i].test(k)) reach[i] |= reach[k];
    for (int i = 0; i < n; ++i)
      if (reach[i].test(i)) throw InvalidPoset("relations contain a cycle through element " + std::to_string(i));
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a) {
      for (auto b = reach[a].find_first(); b != Subset::npos; b = reach[a].find_next(b)) {
        bool direct = true;
        for (auto c = reach[a].find_first(); c != Subset::npos; c = reach[a].find_next(c)) {
          if (c != b && reach[c].test(b)) {
            direct = false;
            break;
          }
        }
        if (direct) covers.emplace_back(a, static_cast<int>(b));
      }
    }
    if (shortcuts) {
      for (auto pr : less_than)
        if (!std::binary_search(covers.begin(), covers.end(), pr)) shortcuts->push_back(pr);
    }
    return Poset(n, std::move(covers), std::move(names));
  }

  static Poset chain(int n) {
    std::vector<std::pair<int, int>> c;
    for (int i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
    return Poset(n, std::move(c));
  }

  static Poset antichain(int n) { return Poset(n, {}); }

  int size() const { return n_; }
  bool leq(int a, int b) const { return down_[b].test(a); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& lower_covers(int a) const { return lower_[a]; }
  const std::vector<int>& upper_covers(int a) const { return upper_[a]; }
  /// {c : c <= a}
  const Subset& down_set(int a) const { return down_[a]; }
  /// {c : c >= a}
  const Subset& up_set(int a) const { return up_[a]; }
  /// Elements in an order compatible with <=.
  const std::vector<int>& topological_order() const { return topo_; }

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(int a) const { return names_.empty() ? std::to_string(a) : names_[a]; }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (int a = 0; a < n_; ++a)
      if (lower_[a].empty()) out.push_back(a);
    return out;
  }
  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int a = 0; a < n_; ++a)
      if (upper_[a].empty()) out.push_back(a);
    return out;
  }

  friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.covers_ == b.covers_; }

 private:
  void build_closure() {
    std::vector<int> indegree(n_);
    for (int b = 0; b < n_; ++b) indegree[b] = static_cast<int>(lower_[b].size());
    std::queue<int> ready;
    for (int a = 0; a < n_; ++a)
      if (indegree[a] == 0) ready.push(a);
    topo_.clear();
    while (!ready.empty()) {
      int a = ready.front();
      ready.pop();
      topo_.push_back(a);
      for (int b : upper_[a])
        if (--indegree[b] == 0) ready.push(b);
    }
    if (static_cast<int>(topo_.size()) != n_) throw InvalidPoset("cover relation contains a cycle");
    down_.assign(n_, Subset(n_));
    up_.assign(n_, Subset(n_));
    for (int a : topo_) {
      down_[a].set(a);
      for (int c : lower_[a]) down_[a] |= down_[c];
    }
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
      int a = *it;
      up_[a].set(a);
      for (int c : upper_[a]) up_[a] |= up_[c];
    }
  }

  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> lower_, upper_;
  std::vector<Subset> down_, up_;
  std::vector<int> topo_;
};

/// The closed interval {c : a <= c <= b}.
inline Subset interval(const Poset& p, int a, int b) {
  if (!p.leq(a, b))
    throw NotComparable("interval [" + p.name(a) + ", " + p.name(b) + "] is empty: " + p.name(a) + " is not <= " +
                        p.name(b));
  return p.up_set(a) & p.down_set(b);
}

struct Neighbors {
  std::vector<int> lower;  ///< elements covered by a
  std::vector<int> upper;  ///< elements covering a
};

inline Neighbors neighbors(const Poset& p, int a) {
  Neighbors n{p.lower_covers(a), p.upper_covers(a)};
  std::sort(n.lower.begin(), n.lower.end());
  std::sort(n.upper.begin(), n.upper.end());
  return n;
}

/// A subset of a poset together with its induced order. `elements[i]` is the
/// element of the ambient poset that became element i of `poset`.
struct InducedSubposet {
  Poset poset;
  std::vector<int> elements;
};

inline InducedSubposet induced_subposet(const Poset& p, const std::vector<int>& elements) {
  std::vector<std::pair<int, int>> rel;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    names.push_back(p.name(elements[i]));
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (i != j && p.less(elements[i], elements[j])) rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return {Poset::from_relations(static_cast<int>(elements.size()), rel, std::move(names)), elements};
}

/// Elements with exactly one lower neighbor, with the induced order.
inline InducedSubposet join_irreducibles(const Poset& p) {
  std::vector<int> els;
  for (int a = 0; a < p.size(); ++a)
    if (p.lower_covers(a).size() == 1) els.push_back(a);
  return induced_subposet(p, els);
}

/// Elements with exactly one upper neighbor, with the induced order.
inline InducedSubposet meet_irreducibles(const Poset& p) {
  std::vector<int> els;
  for (int a = 0; a < p.size(); ++a)
    if (p.upper_covers(a).size() == 1) els.push_back(a);
  return induced_subposet(p, els);
}

/// Rank function when every maximal chain has the same length; nullopt
/// otherwise (the poset is not graded).
inline std::optional<std::vector<int>> rank_function(const Poset& p) {
  std::vector<int> height(p.size(), 0);
  for (int a : p.topological_order())
    for (int c : p.lower_covers(a)) height[a] = std::max(height[a], height[c] + 1);
  for (auto [a, b] : p.covers())
    if (height[b] != height[a] + 1) return std::nullopt;
  std::optional<int> top;
  for (int m : p.maximal_elements()) {
    if (top && *top != height[m]) return std::nullopt;
    top = height[m];
  }
  return height;
}

/// Same ground set with every cover reversed.
inline Poset dual_poset(const Poset& p) {
  std::vector<std::pair<int, int>> rev;
  rev.reserve(p.covers().size());
  for (auto [a, b] : p.covers()) rev.emplace_back(b, a);
  return Poset(p.size(), std::move(rev), p.names());
}

inline bool is_poset_ideal(const Poset& p, const Subset& s) {
  for (auto [a, b] : p.covers())
    if (s.test(b) && !s.test(a)) return false;
  return true;
}

inline bool is_poset_coideal(const Poset& p, const Subset& s) {
  for (auto [a, b] : p.covers())
    if (s.test(a) && !s.test(b)) return false;
  return true;
}

/// Smallest poset ideal containing s.
inline Subset down_closure(const Poset& p, const Subset& s) {
  Subset out(p.size());
  for (int a : members_of(s)) out |= p.down_set(a);
  return out;
}

/// Smallest poset coideal containing s.
inline Subset up_closure(const Poset& p, const Subset& s) {
  Subset out(p.size());
  for (int a : members_of(s)) out |= p.up_set(a);
  return out;
}

enum class Closure { ideal, coideal };

/// Maximal elements of an ideal, or minimal elements of a coideal.
inline std::vector<int> ideal_generators(const Poset& p, const Subset& s, Closure mode) {
  if (mode == Closure::ideal ? !is_poset_ideal(p, s) : !is_poset_coideal(p, s))
    throw NotAnIdeal(mode == Closure::ideal ? "subset is not a poset ideal" : "subset is not a poset coideal");
  std::vector<int> out;
  for (int a : members_of(s)) {
    const auto& next = mode == Closure::ideal ? p.upper_covers(a) : p.lower_covers(a);
    if (std::none_of(next.begin(), next.end(), [&](int b) { return s.test(b); })) out.push_back(a);
  }
  return out;
}

/// Every poset ideal of p as a bit mask, including the empty set and p,
/// sorted by cardinality and then by mask value. Enumeration walks the ideal
/// lattice upward one element at a time; it throws TooLarge once more than
/// `cap` ideals have been produced.
inline std::vector<Mask> poset_ideal_masks(const Poset& p, std::size_t cap = enumeration_cap()) {
  if (p.size() > kMaskBits) throw TooLarge("poset ideals are enumerated only for posets with at most 64 elements");
  const int n = p.size();
  std::vector<Mask> below(n, 0);
  for (int a = 0; a < n; ++a)
    for (int c : p.lower_covers(a)) below[a] |= bit(c);
  std::vector<Mask> out{0};
  std::unordered_set<Mask> seen{0};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Mask ideal = out[head];
    for (int a = 0; a < n; ++a) {
      if ((ideal & bit(a)) || !is_subset(below[a], ideal)) continue;
      const Mask next = ideal | bit(a);
      if (seen.insert(next).second) {
        if (out.size() >= cap) throw TooLarge("more than " + std::to_string(cap) + " poset ideals");
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return out;
}

inline std::vector<Subset> poset_ideals(const Poset& p, std::size_t cap = enumeration_cap()) {
  std::vector<Subset> out;
  for (Mask m : poset_ideal_masks(p, cap)) out.push_back(subset_from_mask(p.size(), m));
  return out;
}

}  // namespace hibilab
