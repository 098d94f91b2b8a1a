#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "hibilab/corpus.hpp"
#include "oracles.hpp"

using namespace hibilab;

namespace {

// Strict order relation as an n*n bit matrix.
using Relation = std::vector<char>;

Relation relation_of(const Poset& p) {
  const int n = p.size();
  Relation r(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r[a * n + b] = p.less(a, b);
  return r;
}

// Smallest relabeled relation over all n! permutations.
Relation brute_canonical(const Relation& r, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Relation best;
  do {
    Relation c(n * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) c[perm[a] * n + perm[b]] = r[a * n + b];
    if (best.empty() || c < best) best = c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Isomorphism classes of all labeled strict partial orders on n elements.
std::size_t brute_class_count(int n) {
  const int cells = n * n;
  std::set<Relation> classes;
  for (Mask m = 0; m < (Mask{1} << cells); ++m) {
    Relation r(cells, 0);
    bool ok = true;
    for (int k = 0; k < cells; ++k) r[k] = m >> k & 1;
    for (int a = 0; a < n && ok; ++a) {
      if (r[a * n + a]) ok = false;
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          if (r[a * n + b] && r[b * n + c] && !r[a * n + c]) ok = false;
    }
    if (ok) classes.insert(brute_canonical(r, n));
  }
  return classes.size();
}

}  // namespace

TEST(PosetEnumeration, CountsMatchBruteForce) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(posets_of_size(n).size(), brute_class_count(n)) << n;
}

TEST(PosetEnumeration, RepresentativesPairwiseNonIsomorphic) {
  for (int n = 1; n <= 4; ++n) {
    std::set<Relation> seen;
    for (const Poset& p : posets_of_size(n)) EXPECT_TRUE(seen.insert(brute_canonical(relation_of(p), n)).second);
  }
}

TEST(PosetEnumeration, FiveAndSix) {
  // counted through the canonical form; checked above against brute force on smaller sizes
  EXPECT_EQ(posets_of_size(5).size(), 63u);
  EXPECT_EQ(posets_of_size(6).size(), 318u);
  EXPECT_THROW(posets_of_size(8), TooLarge);
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937 rng(2);
  for (const Poset& p : poset_corpus(5)) {
    const int n = p.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> rel;
    for (auto [a, b] : p.covers()) rel.emplace_back(perm[a], perm[b]);
    const Poset q = Poset::from_relations(n, rel);
    EXPECT_EQ(canonical_form(p), canonical_form(q));
    EXPECT_TRUE(are_isomorphic(p, q));
  }
}

TEST(CanonicalForm, AgreesWithBruteIsomorphism) {
  const auto corpus = poset_corpus(4);
  for (const Poset& a : corpus)
    for (const Poset& b : corpus) {
      const bool same = a.size() == b.size() &&
                        brute_canonical(relation_of(a), a.size()) == brute_canonical(relation_of(b), b.size());
      EXPECT_EQ(are_isomorphic(a, b), same);
    }
}

TEST(CanonicalForm, BooleanDualSelfIsomorphic) {
  const Poset b3 = boolean_lattice(3).order();
  EXPECT_EQ(canonical_form(b3), canonical_form(dual_poset(b3)));
}

TEST(Corpora, Sizes) {
  std::size_t total = 0;
  for (int n = 1; n <= 4; ++n) total += brute_class_count(n);
  EXPECT_EQ(poset_corpus(4).size(), total);
  EXPECT_EQ(distributive_corpus(4).size(), total);
}

TEST(Corpora, BoundedLatticesAreLattices) {
  const auto corpus = bounded_lattice_corpus(4);
  // every bounded extension of a poset with at most 4 elements is checked directly
  std::size_t expected = 1;
  for (const Poset& p : poset_corpus(4)) {
    const int n = p.size();
    // bounded extension is a lattice iff every pair has a unique minimal upper bound and maximal lower bound
    bool lattice = true;
    for (int a = 0; a < n && lattice; ++a)
      for (int b = 0; b < n && lattice; ++b) {
        if (p.comparable(a, b)) continue;
        std::vector<int> ub, lb;
        for (int c = 0; c < n; ++c) {
          if (p.leq(a, c) && p.leq(b, c)) ub.push_back(c);
          if (p.leq(c, a) && p.leq(c, b)) lb.push_back(c);
        }
        auto count_min = [&](const std::vector<int>& s, bool minimal) {
          int k = 0;
          for (int x : s)
            if (std::none_of(s.begin(), s.end(), [&](int y) { return y != x && (minimal ? p.less(y, x) : p.less(x, y)); })) ++k;
          return k;
        };
        if (count_min(ub, true) > 1 || count_min(lb, false) > 1) lattice = false;
      }
    expected += lattice;
  }
  EXPECT_EQ(corpus.size(), expected);
}

TEST(Segments, CountMatchesBruteForce) {
  for (const Lattice& L : distributive_corpus(3)) {
    const int n = L.size();
    std::size_t count = 0;
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
      bool closed = true;
      for (int a = 0; a < n && closed; ++a)
        for (int c = 0; c < n && closed; ++c)
          for (int b = 0; b < n && closed; ++b)
            if ((m >> a & 1) && (m >> b & 1) && !(m >> c & 1) && L.leq(a, c) && L.leq(c, b)) closed = false;
      count += closed;
    }
    EXPECT_EQ(lattice_segments(L).size(), count);
  }
}

TEST(Samples, Linear) {
  const auto s = linear_sample();
  EXPECT_EQ(s.lattice.size(), 10);
  EXPECT_EQ(s.segment.count(), 8u);
  EXPECT_TRUE(is_segment(s.segment, s.lattice));
  EXPECT_EQ(s.vars.names(), (std::vector<std::string>{"a", "b", "c", "d", "u", "v", "w", "x"}));
}

TEST(Samples, Nonlinear) {
  const auto s = nonlinear_sample();
  EXPECT_EQ(s.lattice.size(), 8);
  EXPECT_EQ(s.segment.count(), 6u);
  EXPECT_TRUE(is_boolean(s.lattice));
}

TEST(RandomComplexes, DeterministicAndInRange) {
  std::mt19937 a(42), b(42);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_complex(a, 6, 5);
    const auto y = random_complex(b, 6, 5);
    EXPECT_EQ(x, y);
    EXPECT_LE(x.num_vertices(), 6);
    EXPECT_LE(x.facets().size(), 5u);
  }
}
