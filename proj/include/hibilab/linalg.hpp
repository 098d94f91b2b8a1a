#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hibilab/bits.hpp"

namespace hibilab {

/// Coefficient field for rank and homology computations.
enum class Field { rationals, char2 };

/// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  std::int64_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

namespace detail {

/// Fraction-free (Bareiss) elimination. Every intermediate entry is a minor of
/// the input, so exact division is valid. Returns false when an entry leaves
/// the range of T (only possible for fixed-width T).
template <typename T, typename Wide>
bool bareiss_rank(std::vector<T> a, int rows, int cols, int& rank_out) {
  auto at = [&](int r, int c) -> T& { return a[static_cast<std::size_t>(r) * cols + c]; };
  T prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (int j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));
    const T piv = at(r, c);
    for (int i = r + 1; i < rows; ++i) {
      const T lead = at(i, c);
      for (int j = c + 1; j < cols; ++j) {
        Wide v = (Wide(piv) * Wide(at(i, j)) - Wide(lead) * Wide(at(r, j))) / Wide(prev);
        if constexpr (!std::is_same_v<T, Wide>) {
          if (v > Wide(std::numeric_limits<T>::max()) || v < Wide(std::numeric_limits<T>::min())) return false;
        }
        at(i, j) = static_cast<T>(v);
      }
      at(i, c) = 0;
    }
    prev = piv;
    ++r;
  }
  rank_out = r;
  return true;
}

inline int gf2_rank(const IntMatrix& m) {
  std::vector<Subset> rows;
  rows.reserve(m.rows);
  for (int r = 0; r < m.rows; ++r) {
    Subset row(m.cols);
    for (int c = 0; c < m.cols; ++c)
      if (m.at(r, c) % 2 != 0) row.set(c);
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int p = rank;
    while (p < m.rows && !rows[p].test(c)) ++p;
    if (p == m.rows) continue;
    std::swap(rows[p], rows[rank]);
    for (int i = 0; i < m.rows; ++i)
      if (i != rank && rows[i].test(c)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank over the rationals (fraction-free elimination, 64-bit with a
/// big-integer retry on overflow) or over GF(2).
inline int matrix_rank(const IntMatrix& m, Field field = Field::rationals) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field == Field::char2) return detail::gf2_rank(m);
  int rank = 0;
  if (detail::bareiss_rank<std::int64_t, __int128>(m.data, m.rows, m.cols, rank)) return rank;
  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> big(m.data.begin(), m.data.end());
  detail::bareiss_rank<cpp_int, cpp_int>(std::move(big), m.rows, m.cols, rank);
  return rank;
}

}  // namespace hibilab
