#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hibilab {

/// Fixed-width set of at most 64 small integers. Used for lattice labels,
/// squarefree monomials and simplicial faces.
using Mask = std::uint64_t;

/// Variable-width subset of a poset or lattice.
using Subset = boost::dynamic_bitset<>;

inline constexpr int kMaskBits = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask low_bits(int n) { return n >= kMaskBits ? ~Mask{0} : bit(n) - 1; }

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(lowest_bit(m));
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

/// Enumerates every submask of `m`, including 0 and `m` itself.
template <typename F>
void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

inline Subset make_subset(std::size_t n, std::initializer_list<int> members) {
  Subset s(n);
  for (int m : members) s.set(static_cast<std::size_t>(m));
  return s;
}

inline Subset subset_from_mask(std::size_t n, Mask m) {
  Subset s(n);
  for_each_bit(m, [&](int i) { s.set(static_cast<std::size_t>(i)); });
  return s;
}

inline Mask mask_from_subset(const Subset& s) {
  Mask m = 0;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) m |= bit(static_cast<int>(i));
  return m;
}

inline std::vector<int> members_of(const Subset& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace hibilab
