#pragma once

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "hibilab/bits.hpp"
#include "hibilab/errors.hpp"
#include "hibilab/homology.hpp"
#include "hibilab/linalg.hpp"
#include "hibilab/monomial.hpp"

namespace hibilab {

/// Graded Betti numbers beta_{i,j} (i = 0 at the generators), optionally
/// refined by squarefree multidegree.
class BettiTable {
 public:
  using Key = std::pair<int, int>;
  using MultiKey = std::pair<int, Mask>;

  void add(int i, Mask multidegree, long long value) {
    if (value == 0) return;
    multigraded_[{i, multidegree}] += value;
    add_graded(i, popcount(multidegree), value);
  }
  void add_graded(int i, int j, long long value) {
    if (value == 0) return;
    graded_[{i, j}] += value;
  }

  long long operator()(int i, int j) const {
    auto it = graded_.find({i, j});
    return it == graded_.end() ? 0 : it->second;
  }
  long long at(int i, Mask multidegree) const {
    auto it = multigraded_.find({i, multidegree});
    return it == multigraded_.end() ? 0 : it->second;
  }
  long long total(int i) const {
    long long t = 0;
    for (const auto& [k, v] : graded_)
      if (k.first == i) t += v;
    return t;
  }
  std::vector<long long> totals() const {
    std::vector<long long> out(length() + 1, 0);
    for (const auto& [k, v] : graded_) out[k.first] += v;
    return out;
  }
  /// Largest homological index with a nonzero entry; -1 for the empty table.
  int length() const {
    int m = -1;
    for (const auto& [k, v] : graded_) m = std::max(m, k.first);
    return m;
  }
  bool empty() const { return graded_.empty(); }

  const std::map<Key, long long>& entries() const { return graded_; }
  const std::map<MultiKey, long long>& multigraded() const { return multigraded_; }

  /// True iff every nonzero entry sits at j = i + d.
  bool is_linear(int d) const {
    return std::all_of(graded_.begin(), graded_.end(), [&](const auto& kv) { return kv.first.second == kv.first.first + d; });
  }

  /// Compares graded entries only.
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.graded_ == b.graded_; }
  bool same_multigraded(const BettiTable& other) const { return multigraded_ == other.multigraded_; }

  /// Rows are indexed by j - i, columns by i.
  std::string to_text() const {
    std::ostringstream out;
    if (graded_.empty()) {
      out << "zero table\n";
      return out.str();
    }
    const int len = length();
    int lo = 1 << 30, hi = -(1 << 30);
    for (const auto& [k, v] : graded_) {
      lo = std::min(lo, k.second - k.first);
      hi = std::max(hi, k.second - k.first);
    }
    std::size_t w = 1;
    for (const auto& [k, v] : graded_) w = std::max(w, std::to_string(v).size());
    for (int i = 0; i <= len; ++i) w = std::max(w, std::to_string(total(i)).size());
    w = std::max<std::size_t>(w, std::to_string(len).size());
    auto cell = [&](const std::string& s) { out << ' ' << std::setw(static_cast<int>(w)) << s; };
    out << std::setw(7) << "";
    for (int i = 0; i <= len; ++i) cell(std::to_string(i));
    out << "\n" << std::setw(7) << "total:";
    for (int i = 0; i <= len; ++i) cell(std::to_string(total(i)));
    out << "\n";
    for (int r = lo; r <= hi; ++r) {
      out << std::setw(6) << r << ':';
      for (int i = 0; i <= len; ++i) {
        const long long v = (*this)(i, i + r);
        cell(v == 0 ? "." : std::to_string(v));
      }
      out << "\n";
    }
    return out.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, v] : graded_) arr.push_back({{"i", k.first}, {"j", k.second}, {"beta", v}});
    return arr;
  }

 private:
  std::map<Key, long long> graded_;
  std::map<MultiKey, long long> multigraded_;
};

struct OracleOptions {
  std::size_t max_generators = 20;
  Field field = Field::rationals;
};

/// Every lcm of a nonempty set of generators.
inline std::vector<Mask> lcm_closure(const std::vector<Mask>& gens) {
  std::unordered_set<Mask> seen(gens.begin(), gens.end());
  std::vector<Mask> out(seen.begin(), seen.end());
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Mask g : gens) {
      const Mask m = out[head] | g;
      if (seen.insert(m).second) out.push_back(m);
    }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return out;
}

namespace detail {

inline std::vector<Mask> supports(const MonomialIdeal& ideal) {
  std::vector<Mask> out;
  for (const auto& g : ideal.gens()) out.push_back(g.support());
  return out;
}

}  // namespace detail

/// Multigraded Betti numbers from homology of the upper Koszul complexes:
/// beta_{i,m} = dim H~_{i-1}(K_m), where K_m on the support of m has facets
/// m \ g for the generators g dividing m. Only lcms of generators can carry
/// nonzero entries.
inline BettiTable graded_betti_oracle(const MonomialIdeal& ideal, const OracleOptions& opt = {}) {
  BettiTable table;
  if (ideal.is_zero()) return table;
  if (ideal.num_gens() > opt.max_generators)
    throw TooManyGenerators("oracle accepts at most " + std::to_string(opt.max_generators) + " generators, got " +
                            std::to_string(ideal.num_gens()));
  if (ideal.is_unit()) {
    table.add(0, 0, 1);
    return table;
  }
  const std::vector<Mask> gens = detail::supports(ideal);
  for (Mask m : lcm_closure(gens)) {
    std::vector<Mask> facets;
    Mask common = m;
    for (Mask g : gens)
      if (is_subset(g, m)) {
        facets.push_back(m & ~g);
        common &= m & ~g;
      }
    if (common != 0) continue;  // a cone
    const auto h = reduced_homology(maximal_sets(facets), opt.field);
    for (std::size_t k = 0; k < h.size(); ++k) table.add(static_cast<int>(k), m, h[k]);
  }
  return table;
}

/// Literal Taylor-complex computation: in multidegree m the chains are the
/// generator subsets with lcm m, and a face is kept in the boundary only if
/// removing it keeps the lcm. Exponential in the generator count; used as a
/// cross-check.
inline BettiTable taylor_betti(const MonomialIdeal& ideal, const OracleOptions& opt = {}) {
  BettiTable table;
  if (ideal.is_zero()) return table;
  if (ideal.num_gens() > std::min<std::size_t>(opt.max_generators, 12))
    throw TooManyGenerators("Taylor computation accepts at most 12 generators");
  const std::vector<Mask> gens = detail::supports(ideal);
  const int g = static_cast<int>(gens.size());
  std::vector<Mask> lcm_of(std::size_t{1} << g, 0);
  for (Mask f = 1; f < lcm_of.size(); ++f) lcm_of[f] = lcm_of[f & (f - 1)] | gens[lowest_bit(f)];
  std::map<Mask, std::vector<Mask>> strands;
  for (Mask f = 1; f < lcm_of.size(); ++f) strands[lcm_of[f]].push_back(f);
  for (auto& [m, chains] : strands) {
    int top = 0;
    for (Mask f : chains) top = std::max(top, popcount(f));
    std::vector<std::vector<Mask>> by_size(top + 2);
    for (Mask f : chains) by_size[popcount(f)].push_back(f);
    std::vector<int> rank(top + 2, 0);  // rank[k]: boundary from size k to size k - 1
    for (int k = 2; k <= top; ++k) {
      const auto& src = by_size[k];
      const auto& dst = by_size[k - 1];
      if (src.empty() || dst.empty()) continue;
      std::map<Mask, int> row;
      for (std::size_t i = 0; i < dst.size(); ++i) row[dst[i]] = static_cast<int>(i);
      IntMatrix mat(static_cast<int>(dst.size()), static_cast<int>(src.size()));
      for (std::size_t c = 0; c < src.size(); ++c) {
        int pos = 0;
        for_each_bit(src[c], [&](int v) {
          auto it = row.find(src[c] & ~bit(v));
          if (it != row.end()) mat.at(it->second, static_cast<int>(c)) = pos % 2 == 0 ? 1 : -1;
          ++pos;
        });
      }
      rank[k] = matrix_rank(mat, opt.field);
    }
    for (int k = 1; k <= top; ++k)
      table.add(k - 1, m, static_cast<long long>(by_size[k].size()) - rank[k] - rank[k + 1]);
  }
  return table;
}

/// True iff the generators share one degree d and beta_{i,j} = 0 for j != i + d.
/// The zero ideal counts as linear.
inline bool has_linear_resolution(const MonomialIdeal& ideal, const OracleOptions& opt = {}) {
  if (ideal.is_zero()) return true;
  const auto d = ideal.generator_degree();
  if (!d) return false;
  return graded_betti_oracle(ideal, opt).is_linear(*d);
}

}  // namespace hibilab
