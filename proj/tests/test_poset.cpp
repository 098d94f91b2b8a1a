#include <gtest/gtest.h>

#include "hibilab/corpus.hpp"
#include "hibilab/lattice.hpp"
#include "hibilab/poset.hpp"
#include "oracles.hpp"

using namespace hibilab;

namespace {

Poset sample() { return Poset::from_relations(4, {{1, 3}, {2, 3}}, {"a", "b", "c", "d"}); }

// The ten-element lattice J(sample) viewed as a plain poset.
Poset sample_lattice_order() { return lattice_of_ideals(sample()).order(); }

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Interval, WholeChain) {
  EXPECT_EQ(members_of(interval(Poset::chain(3), 0, 2)), (std::vector<int>{0, 1, 2}));
}

TEST(Interval, SingleElement) {
  const Poset p = sample();
  for (int a = 0; a < p.size(); ++a) EXPECT_EQ(members_of(interval(p, a, a)), std::vector<int>{a});
}

TEST(Interval, BooleanBottomToTop) {
  const Poset b3 = oracle::boolean_poset(3);
  EXPECT_EQ(members_of(interval(b3, 0, 7)), (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(interval(b3, 1, 7).count(), 4u);
}

TEST(Interval, IncomparableThrows) {
  EXPECT_THROW(interval(sample(), 0, 1), NotComparable);
  EXPECT_THROW(interval(Poset::chain(3), 2, 0), NotComparable);
}

TEST(Neighbors, Chain) {
  const auto n = neighbors(Poset::chain(3), 1);
  EXPECT_EQ(n.lower, std::vector<int>{0});
  EXPECT_EQ(n.upper, std::vector<int>{2});
}

TEST(Neighbors, Antichain) {
  const auto n = neighbors(Poset::antichain(3), 1);
  EXPECT_TRUE(n.lower.empty());
  EXPECT_TRUE(n.upper.empty());
}

TEST(Neighbors, BooleanRankTwo) {
  const Poset b3 = oracle::boolean_poset(3);
  for (int m : {3, 5, 6}) {
    const auto n = neighbors(b3, m);
    EXPECT_EQ(n.lower.size(), 2u);
    EXPECT_EQ(n.upper.size(), 1u);
  }
}

TEST(JoinIrreducibles, BooleanAtoms) {
  const auto j = join_irreducibles(oracle::boolean_poset(3));
  EXPECT_EQ(j.elements, (std::vector<int>{1, 2, 4}));
  EXPECT_TRUE(j.poset.covers().empty());
}

TEST(JoinIrreducibles, Chain) {
  const auto j = join_irreducibles(Poset::chain(4));
  EXPECT_EQ(j.elements, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(j.poset.covers().size(), 2u);
}

TEST(JoinIrreducibles, SampleLattice) {
  const Lattice L = lattice_of_ideals(sample());
  const auto j = join_irreducibles(L.order());
  std::vector<std::string> names;
  for (int e : j.elements) names.push_back(L.name(e));
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"a", "b", "bcd", "c"}));
}

TEST(MeetIrreducibles, ChainAndBoolean) {
  EXPECT_EQ(meet_irreducibles(Poset::chain(3)).elements, (std::vector<int>{0, 1}));
  EXPECT_EQ(meet_irreducibles(oracle::boolean_poset(3)).elements, (std::vector<int>{3, 5, 6}));
}

TEST(MeetIrreducibles, DualOfJoinIrreducibles) {
  for (const Poset& p : poset_corpus(4)) {
    EXPECT_EQ(join_irreducibles(dual_poset(p)).elements, meet_irreducibles(p).elements);
  }
}

TEST(RankFunction, Boolean) {
  const auto r = rank_function(oracle::boolean_poset(3));
  ASSERT_TRUE(r.has_value());
  for (int m = 0; m < 8; ++m) EXPECT_EQ((*r)[m], popcount(static_cast<Mask>(m)));
}

TEST(RankFunction, UnequalChainsNotGraded) {
  // a < b < c and d < c
  const Poset p = Poset::from_relations(4, {{0, 1}, {1, 2}, {3, 2}});
  EXPECT_FALSE(rank_function(p).has_value());
}

TEST(RankFunction, SampleLatticeRankFour) {
  const Poset p = sample_lattice_order();
  const auto r = rank_function(p);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*std::max_element(r->begin(), r->end()), 4);
  for (auto [a, b] : p.covers()) EXPECT_EQ((*r)[b], (*r)[a] + 1);
}

TEST(DualPoset, Involution) {
  for (const Poset& p : poset_corpus(4)) EXPECT_EQ(dual_poset(dual_poset(p)).covers(), p.covers());
}

TEST(DualPoset, ChainReversed) {
  const Poset d = dual_poset(Poset::chain(3));
  EXPECT_TRUE(d.less(2, 1));
  EXPECT_TRUE(d.less(1, 0));
}

TEST(DualPoset, BooleanSelfDual) {
  const Poset b3 = oracle::boolean_poset(3);
  EXPECT_TRUE(are_isomorphic(dual_poset(b3), b3));
  EXPECT_FALSE(are_isomorphic(sample(), dual_poset(sample())));
}

TEST(PosetIdeals, ChainOfTwo) {
  EXPECT_EQ(poset_ideal_masks(Poset::chain(2)), (std::vector<Mask>{0, 1, 3}));
}

TEST(PosetIdeals, AntichainGivesAllSubsets) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(poset_ideal_masks(Poset::antichain(n)).size(), std::size_t{1} << n);
}

TEST(PosetIdeals, SampleTenIdeals) {
  const Poset p = sample();
  auto expected = oracle::ideals(p);
  auto got = poset_ideal_masks(p);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got.size(), 10u);
}

TEST(PosetIdeals, OrderedBySizeThenMask) {
  const auto masks = poset_ideal_masks(sample());
  for (std::size_t i = 1; i < masks.size(); ++i) {
    const auto a = masks[i - 1], b = masks[i];
    EXPECT_TRUE(popcount(a) < popcount(b) || (popcount(a) == popcount(b) && a < b));
  }
}

TEST(PosetIdeals, CountMatchesAntichains) {
  for (const Poset& p : poset_corpus(5))
    EXPECT_EQ(static_cast<long>(poset_ideal_masks(p).size()), oracle::count_antichains(p));
}

TEST(PosetIdeals, CapRefuses) {
  EXPECT_THROW(poset_ideal_masks(Poset::antichain(6), 10), TooLarge);
  EXPECT_NO_THROW(poset_ideal_masks(Poset::antichain(6), 64));
}

TEST(PosetIdeals, UnionAndIntersectionStayIdeals) {
  const Poset p = sample();
  const auto ideals = poset_ideals(p);
  for (const auto& I : ideals)
    for (const auto& K : ideals) {
      EXPECT_TRUE(is_poset_ideal(p, I | K));
      EXPECT_TRUE(is_poset_ideal(p, I & K));
      EXPECT_TRUE(is_poset_coideal(p, ~I | ~K));
    }
}

TEST(IdealPredicates, EmptyAndFull) {
  const Poset p = sample();
  const Subset none(4), all = ~Subset(4);
  EXPECT_TRUE(is_poset_ideal(p, none));
  EXPECT_TRUE(is_poset_coideal(p, none));
  EXPECT_TRUE(is_poset_ideal(p, all));
  EXPECT_TRUE(is_poset_coideal(p, all));
}

TEST(IdealPredicates, ComplementDuality) {
  const Poset p = sample();
  for (Mask m = 0; m < 16; ++m) {
    const Subset s = subset_from_mask(4, m);
    EXPECT_EQ(is_poset_ideal(p, s), is_poset_coideal(p, ~s));
  }
}

TEST(IdealPredicates, TopElementAlone) {
  const Subset d = make_subset(4, {3});
  EXPECT_TRUE(is_poset_coideal(sample(), d));
  EXPECT_FALSE(is_poset_ideal(sample(), d));
}

TEST(IdealGenerators, Principal) {
  const Poset p = sample();
  EXPECT_EQ(ideal_generators(p, p.down_set(3), Closure::ideal), std::vector<int>{3});
  EXPECT_EQ(ideal_generators(p, p.up_set(1), Closure::coideal), std::vector<int>{1});
}

TEST(IdealGenerators, Empty) {
  EXPECT_TRUE(ideal_generators(sample(), Subset(4), Closure::ideal).empty());
}

TEST(IdealGenerators, BooleanRankTwo) {
  const Poset b3 = oracle::boolean_poset(3);
  Subset s(8);
  for (int m = 0; m < 7; ++m) s.set(m);
  EXPECT_EQ(sorted(ideal_generators(b3, s, Closure::ideal)), (std::vector<int>{3, 5, 6}));
}

TEST(IdealGenerators, RejectsNonIdeal) {
  EXPECT_THROW(ideal_generators(sample(), make_subset(4, {3}), Closure::ideal), NotAnIdeal);
}

TEST(PosetConstruction, CoverConstructorRejectsShortcut) {
  EXPECT_THROW(Poset(3, {{0, 1}, {1, 2}, {0, 2}}), InvalidPoset);
  EXPECT_THROW(Poset(2, {{0, 1}, {1, 0}}), InvalidPoset);
}

TEST(PosetConstruction, RelationsReportShortcuts) {
  std::vector<std::pair<int, int>> shortcuts;
  const Poset p = Poset::from_relations(3, {{0, 1}, {1, 2}, {0, 2}}, {}, &shortcuts);
  EXPECT_EQ(p.covers().size(), 2u);
  EXPECT_EQ(shortcuts, (std::vector<std::pair<int, int>>{{0, 2}}));
  EXPECT_THROW(Poset::from_relations(2, {{0, 1}, {1, 0}}), InvalidPoset);
}

TEST(PosetConstruction, ClosureIsPartialOrder) {
  for (const Poset& p : poset_corpus(4)) {
    for (int a = 0; a < p.size(); ++a) {
      EXPECT_TRUE(p.leq(a, a));
      for (int b = 0; b < p.size(); ++b) {
        if (a != b) EXPECT_FALSE(p.leq(a, b) && p.leq(b, a));
        for (int c = 0; c < p.size(); ++c)
          if (p.leq(a, b) && p.leq(b, c)) EXPECT_TRUE(p.leq(a, c));
      }
    }
  }
}
