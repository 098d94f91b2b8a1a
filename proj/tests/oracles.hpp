#pragma once

// Brute-force references used to derive expected values in the tests. They
// share no code with the library beyond the basic data types.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hibilab/bits.hpp"
#include "hibilab/poset.hpp"

namespace oracle {

using hibilab::Mask;

inline Mask full(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Subsets of an r-set ordered by inclusion, elements numbered by mask.
inline hibilab::Poset boolean_poset(int r) {
  std::vector<std::pair<int, int>> rel;
  for (Mask a = 0; a < (Mask{1} << r); ++a)
    for (Mask b = 0; b < (Mask{1} << r); ++b)
      if (a != b && (a & ~b) == 0) rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return hibilab::Poset::from_relations(1 << r, rel);
}

/// Every down-closed subset, by testing all 2^n subsets.
inline std::vector<Mask> ideals(const hibilab::Poset& p) {
  const int n = p.size();
  std::vector<Mask> out;
  for (Mask s = 0; s <= full(n); ++s) {
    bool closed = true;
    for (int b = 0; b < n && closed; ++b)
      if (s >> b & 1)
        for (int a = 0; a < n; ++a)
          if (p.leq(a, b) && !(s >> a & 1)) closed = false;
    if (closed) out.push_back(s);
    if (s == full(n)) break;
  }
  return out;
}

/// Antichain count by recursion over elements (include or skip), memo-free.
inline long count_antichains(const hibilab::Poset& p, int from = 0, Mask chosen = 0) {
  if (from == p.size()) return 1;
  long total = count_antichains(p, from + 1, chosen);
  bool ok = true;
  for (int a = 0; a < from; ++a)
    if ((chosen >> a & 1) && (p.leq(a, from) || p.leq(from, a))) ok = false;
  if (ok) total += count_antichains(p, from + 1, chosen | (Mask{1} << from));
  return total;
}

/// Minimal transversals of a family over n vertices, by scanning all subsets.
inline std::vector<Mask> minimal_covers(const std::vector<Mask>& family, int n) {
  std::vector<Mask> hits;
  for (Mask s = 0; s <= full(n); ++s) {
    if (std::all_of(family.begin(), family.end(), [&](Mask f) { return (f & s) != 0; })) hits.push_back(s);
    if (s == full(n)) break;
  }
  std::vector<Mask> out;
  for (Mask s : hits)
    if (std::none_of(hits.begin(), hits.end(), [&](Mask t) { return t != s && (t & ~s) == 0; })) out.push_back(s);
  return out;
}

/// All faces of the complex generated by `facets`.
inline std::set<Mask> faces(const std::vector<Mask>& facets) {
  std::set<Mask> out;
  for (Mask f : facets)
    for (Mask s = f;; s = (s - 1) & f) {
      out.insert(s);
      if (s == 0) break;
    }
  return out;
}

inline long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
