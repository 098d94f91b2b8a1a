#include <gtest/gtest.h>

#include "hibilab/corpus.hpp"
#include "hibilab/resolution.hpp"
#include "oracles.hpp"

using namespace hibilab;

namespace {

Poset sample() { return Poset::from_relations(4, {{1, 3}, {2, 3}}, {"a", "b", "c", "d"}); }

}  // namespace

TEST(Resolution, BooleanRanks) {
  const Lattice L = boolean_lattice(3);
  const auto r = hhz_resolution(L);
  EXPECT_EQ(r.ranks(), (std::vector<long long>{8, 12, 6, 1}));
  EXPECT_TRUE(differential_squares_to_zero(r));
  EXPECT_TRUE(is_homogeneous(r));
  EXPECT_TRUE(is_minimal(r));
}

TEST(Resolution, SampleLatticeMatchesOracle) {
  const Lattice L = lattice_of_ideals(sample());
  const auto r = hhz_resolution(L);
  const auto H = hibi_ideal(L, L.full_subset());
  EXPECT_TRUE(exactness_check(r, H));
  const auto oracle_table = graded_betti_oracle(H);
  EXPECT_EQ(betti_from_resolution(r), oracle_table);
  EXPECT_EQ(r.ranks(), (std::vector<long long>{10, 15, 7, 1}));
}

TEST(Resolution, EveryCorpusIdealMatchesOracle) {
  int checked = 0;
  for (const Lattice& L : distributive_corpus(4)) {
    for (const Subset& I : lattice_ideals(L)) {
      if (I.none()) continue;
      const auto r = hhz_resolution(L, I);
      const auto H = hibi_ideal(L, I, r.vars);
      ASSERT_TRUE(exactness_check(r, H));
      const auto t = betti_from_resolution(r);
      EXPECT_EQ(t, graded_betti_oracle(H));
      EXPECT_TRUE(t.same_multigraded(graded_betti_oracle(H)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 400);
}

TEST(Resolution, ProjectiveDimension) {
  // length equals the largest number of lower covers of an element
  for (const Lattice& L : distributive_corpus(4)) {
    std::size_t most = 0;
    for (int e = 0; e < L.size(); ++e) most = std::max(most, L.lower_covers(e).size());
    EXPECT_EQ(hhz_resolution(L).length(), static_cast<int>(most));
  }
}

TEST(Resolution, TermsCountSubsetsOfCovers) {
  const Lattice L = lattice_of_ideals(sample());
  const auto r = hhz_resolution(L);
  for (int i = 0; i <= r.length(); ++i) {
    long long expected = 0;
    for (int e = 0; e < L.size(); ++e)
      expected += oracle::binomial(static_cast<int>(L.lower_covers(e).size()), i);
    EXPECT_EQ(r.ranks()[i], expected);
  }
}

TEST(Resolution, FlippedSignBreaksComplex) {
  auto r = hhz_resolution(boolean_lattice(2));
  ASSERT_TRUE(differential_squares_to_zero(r));
  r.differentials[1][0].sign *= -1;
  EXPECT_FALSE(differential_squares_to_zero(r));
}

TEST(Resolution, DroppedTermFailsExactness) {
  const Lattice L = boolean_lattice(2);
  auto r = hhz_resolution(L);
  r.terms.pop_back();
  r.differentials.pop_back();
  EXPECT_FALSE(exactness_check(r, hibi_ideal(L, L.full_subset())));
}

TEST(Resolution, WrongIdealFailsExactness) {
  const Lattice L = boolean_lattice(2);
  const auto r = hhz_resolution(L);
  Subset s = L.full_subset();
  s.reset(L.top());
  EXPECT_FALSE(exactness_check(r, hibi_ideal(L, s)));
}

TEST(Resolution, RejectsNonMeetClosed) {
  const Lattice L = boolean_lattice(2);
  // the two atoms without the bottom
  EXPECT_THROW(hhz_resolution(L, make_subset(4, {1, 2})), NotMeetClosed);
}

TEST(Resolution, RejectsNonCoverNeighbors) {
  const Lattice L = boolean_lattice(2);
  EXPECT_THROW(hhz_resolution(L, make_subset(4, {0, 3})), PreconditionViolated);
}

TEST(Resolution, RejectsBadOrder) {
  const Lattice L = lattice_of_ideals(Poset::chain(2));
  EXPECT_THROW(hhz_resolution(L, std::vector<int>{1, 0}), PreconditionViolated);
  EXPECT_THROW(hhz_resolution(L, std::vector<int>{0}), PreconditionViolated);
}

TEST(Resolution, RejectsNonDistributive) {
  const Poset diamond(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  const Lattice L = build_lattice(diamond);
  EXPECT_THROW(hhz_resolution(L), NotDistributive);
  EXPECT_THROW(dual_resolution(L), NotDistributive);
}

TEST(Resolution, HandMadeUnitEntryIsNotMinimal) {
  ResolutionComplex r;
  r.vars = VarSpace::plain(2);
  r.terms = {{{0, 0, 0b01}}, {{0, 0b1, 0b01}}};
  r.differentials = {{}, {{0, 0, 1, -1}}};
  r.element_labels = {0b1};
  r.neighbor_labels = {{0b1}};
  EXPECT_FALSE(is_minimal(r));
  EXPECT_THROW(betti_from_resolution(r), NotMinimal);
}

TEST(Resolution, OrdersGiveSameBetti) {
  for (const Lattice& L : distributive_corpus(4)) {
    const Poset& P = L.irreducibles();
    const auto a = hhz_resolution(L, default_linear_extension(P));
    const auto b = hhz_resolution(L, alternate_linear_extension(P));
    EXPECT_EQ(betti_from_resolution(a), betti_from_resolution(b));
    EXPECT_TRUE(differential_squares_to_zero(b));
  }
}

TEST(LinearExtension, DefaultAndAlternate) {
  const Poset p = sample();
  EXPECT_EQ(default_linear_extension(p), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(alternate_linear_extension(p), (std::vector<int>{2, 1, 0, 3}));
  EXPECT_TRUE(is_linear_extension(p, {2, 0, 1, 3}));
  EXPECT_FALSE(is_linear_extension(p, {3, 0, 1, 2}));
  EXPECT_FALSE(is_linear_extension(p, {0, 0, 1, 3}));
}

TEST(DualResolution, ResolvesSwappedIdeal) {
  for (const Lattice& L : distributive_corpus(3)) {
    const auto fd = dual_resolution(L);
    const auto H = hibi_ideal(L, L.full_subset()).swap_xy();
    EXPECT_TRUE(exactness_check(fd, H));
  }
}

TEST(ComparisonMapTest, IsomorphismOnCorpus) {
  for (const Lattice& L : distributive_corpus(4)) {
    const auto c = iso_pi(L);
    EXPECT_TRUE(c.degrees_match);
    EXPECT_TRUE(c.bijective);
    EXPECT_TRUE(c.chain_map);
  }
}

TEST(ComparisonMapTest, AlternateOrder) {
  const Lattice L = boolean_lattice(3);
  EXPECT_TRUE(iso_pi(L, alternate_linear_extension(L.irreducibles())).ok());
}

TEST(LcmLaw, HoldsOnDistributiveCorpus) {
  for (const Lattice& L : distributive_corpus(4)) EXPECT_FALSE(lcm_law_violation(L).has_value());
}

TEST(ResolutionJson, HasTerms) {
  const Lattice L = boolean_lattice(1);
  const auto j = to_json(hhz_resolution(L), L);
  EXPECT_FALSE(j.dump().empty());
}
