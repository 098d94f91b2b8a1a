#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "hibilab/bits.hpp"
#include "hibilab/errors.hpp"
#include "hibilab/linalg.hpp"

namespace hibilab {

/// All faces of the complex generated by `facets`, grouped by cardinality
/// (index k holds the faces with k vertices). The empty face is present
/// whenever there is at least one facet.
inline std::vector<std::vector<Mask>> faces_by_size(const std::vector<Mask>& facets) {
  std::vector<Mask> all;
  Mask support = 0;
  for (Mask f : facets) support |= f;
  if (popcount(support) <= 22) {
    // Mark faces in a table indexed by position within the support.
    const std::vector<int> verts = bits_of(support);
    const int d = static_cast<int>(verts.size());
    auto compress = [&](Mask f) {
      Mask c = 0;
      for (int i = 0; i < d; ++i)
        if (f & bit(verts[i])) c |= bit(i);
      return c;
    };
    std::vector<char> is_face(std::size_t{1} << d, 0);
    for (Mask f : facets) {
      const Mask c = compress(f);
      if (is_face[c]) continue;
      for_each_submask(c, [&](Mask s) { is_face[s] = 1; });
    }
    for (Mask c = 0; c < is_face.size(); ++c) {
      if (!is_face[c]) continue;
      Mask f = 0;
      for_each_bit(c, [&](int i) { f |= bit(verts[i]); });
      all.push_back(f);
    }
  } else {
    throw TooLarge("complex has more than 22 vertices");
  }
  int maxk = 0;
  for (Mask f : all) maxk = std::max(maxk, popcount(f));
  std::vector<std::vector<Mask>> out(facets.empty() ? 0 : maxk + 1);
  for (Mask f : all) out[popcount(f)].push_back(f);
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

/// Ranks of the reduced homology of the complex generated by `facets`:
/// entry k + 1 is dim H~_k for k = -1 .. dim. The void complex (no facets)
/// has no homology and yields an empty vector.
inline std::vector<long long> reduced_homology(const std::vector<Mask>& facets, Field field = Field::rationals) {
  const auto faces = faces_by_size(facets);
  const int levels = static_cast<int>(faces.size());
  std::vector<long long> out(levels, 0);
  if (levels == 0) return out;
  // rank of the boundary map from faces of size k to faces of size k - 1
  std::vector<int> boundary_rank(levels + 1, 0);
  for (int k = 1; k < levels; ++k) {
    const auto& src = faces[k];
    const auto& dst = faces[k - 1];
    if (src.empty() || dst.empty()) continue;
    std::unordered_map<Mask, int> row;
    row.reserve(dst.size());
    for (std::size_t i = 0; i < dst.size(); ++i) row.emplace(dst[i], static_cast<int>(i));
    IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
      int pos = 0;
      for_each_bit(src[c], [&](int v) {
        m.at(row.at(src[c] & ~bit(v)), static_cast<int>(c)) = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      });
    }
    boundary_rank[k] = matrix_rank(m, field);
  }
  for (int k = 0; k < levels; ++k)
    out[k] = static_cast<long long>(faces[k].size()) - boundary_rank[k] - boundary_rank[k + 1];
  return out;
}

/// Reduced Betti number dim H~_k (k >= -1) of the complex generated by facets.
inline long long reduced_betti(const std::vector<Mask>& facets, int k, Field field = Field::rationals) {
  const auto h = reduced_homology(facets, field);
  const int idx = k + 1;
  return idx >= 0 && idx < static_cast<int>(h.size()) ? h[idx] : 0;
}

/// Inclusion-maximal members of a family of sets.
inline std::vector<Mask> maximal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets)
    if (std::none_of(out.begin(), out.end(), [&](Mask t) { return is_subset(s, t); })) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

/// Inclusion-minimal members of a family of sets, sorted by (size, value).
inline std::vector<Mask> minimal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets)
    if (std::none_of(out.begin(), out.end(), [&](Mask t) { return is_subset(t, s); })) out.push_back(s);
  return out;
}

/// All inclusion-minimal transversals (hitting sets) of a family. Branches on
/// the vertices of an unhit member of minimum size. The empty family has the
/// single transversal {}; a family containing the empty set has none.
inline std::vector<Mask> minimal_transversals(const std::vector<Mask>& family) {
  for (Mask f : family)
    if (f == 0) return {};
  std::vector<Mask> fam = minimal_sets(family);
  std::vector<Mask> found;
  auto rec = [&](auto&& self, Mask chosen, Mask forbidden) -> void {
    const Mask* pick = nullptr;
    for (const Mask& f : fam) {
      if (f & chosen) continue;
      if (!pick || popcount(f & ~forbidden) < popcount(*pick & ~forbidden)) pick = &f;
    }
    if (!pick) {
      found.push_back(chosen);
      return;
    }
    // Vertices tried earlier in this branch are excluded from later siblings,
    // which keeps the branches disjoint.
    Mask options = *pick & ~forbidden;
    Mask excluded = forbidden;
    for_each_bit(options, [&](int v) {
      self(self, chosen | bit(v), excluded);
      excluded |= bit(v);
    });
  };
  rec(rec, 0, 0);
  return minimal_sets(std::move(found));
}

}  // namespace hibilab
