#include <gtest/gtest.h>

#include "hibilab/analysis.hpp"
#include "hibilab/corpus.hpp"
#include "oracles.hpp"

using namespace hibilab;

namespace {

Poset sample() { return Poset::from_relations(4, {{1, 3}, {2, 3}}, {"a", "b", "c", "d"}); }

int by_name(const Lattice& L, const std::string& n) {
  for (int e = 0; e < L.size(); ++e)
    if (L.name(e) == n) return e;
  throw std::runtime_error("no element " + n);
}

Subset named(const Lattice& L, std::initializer_list<const char*> names) {
  Subset s = L.empty_subset();
  for (const char* n : names) s.set(by_name(L, n));
  return s;
}

// Every split (I, J) of L with I an ideal, J a coideal and I u J = L.
template <typename F>
void for_each_split(const Lattice& L, F f) {
  const auto ideals = lattice_ideals(L);
  for (const Subset& I : ideals)
    for (const Subset& K : ideals)
      if ((K & ~I).none()) f(I, Subset(~K));
}

// Complex whose facet ideal is H*_S.
SimplicialComplex complex_of_segment(const Lattice& L, const Subset& s, const VarSpace& vars) {
  return complex_of_facet_ideal(dual_star(hibi_ideal(L, s, vars)));
}

std::vector<Mask> supports_of(const MonomialIdeal& I) {
  std::vector<Mask> out;
  for (auto g : I.gens()) out.push_back(g.support());
  std::sort(out.begin(), out.end());
  return out;
}

// Independence complex of a bipartite graph on 2n vertices (x_i = i, y_j = n + j).
SimplicialComplex independence_complex(const BipartiteGraph& g) {
  const int n = g.n;
  std::vector<Mask> independent;
  for (Mask s = 0; s < (Mask{1} << 2 * n); ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if ((s >> i & 1) && (s >> (n + j) & 1) && g.edge(i, j)) ok = false;
    if (ok) independent.push_back(s);
  }
  return SimplicialComplex(2 * n, independent);
}

}  // namespace

TEST(CheckEqual, AgreesWithComputedIntersection) {
  int splits = 0;
  for (const Lattice& L : distributive_corpus(3))
    for_each_split(L, [&](const Subset& I, const Subset& J) {
      const bool actual = hibi_ideal(L, I & J) == intersect(hibi_ideal(L, I), hibi_ideal(L, J));
      const auto rep = check_equal(L, I, J);
      EXPECT_EQ(rep.verdict, actual);
      EXPECT_EQ(rep.witnesses.empty(), rep.verdict);
      ++splits;
    });
  EXPECT_GT(splits, 100);
}

TEST(CheckEqual, WitnessIsBadCover) {
  const Lattice L = boolean_lattice(2);
  // I = {0, a}, J = {b, 1}: the cover 0 < b has b outside I and 0 outside J
  const Subset I = make_subset(4, {0, 1});
  const Subset J = make_subset(4, {2, 3});
  const auto rep = check_equal(L, I, J);
  EXPECT_FALSE(rep.verdict);
  ASSERT_FALSE(rep.witnesses.empty());
  for (const auto& w : rep.witnesses) {
    EXPECT_FALSE(I.test(w.elements[1]));
    EXPECT_FALSE(J.test(w.elements[0]));
    EXPECT_TRUE(L.covers(w.elements[0], w.elements[1]));
  }
}

TEST(CheckEqual, Preconditions) {
  const Lattice L = boolean_lattice(2);
  EXPECT_THROW(check_equal(L, make_subset(4, {1}), L.full_subset()), PreconditionViolated);
  EXPECT_THROW(check_equal(L, L.full_subset(), make_subset(4, {0})), PreconditionViolated);
  EXPECT_THROW(check_equal(L, make_subset(4, {0}), make_subset(4, {3})), PreconditionViolated);
  EXPECT_THROW(check_equal(L, Subset(3), L.full_subset()), SizeMismatch);
  const Lattice M3 = build_lattice(Poset(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_THROW(check_equal(M3, M3.full_subset(), M3.full_subset()), PreconditionViolated);
}

TEST(CheckLinear, AgreesWithOracle) {
  int cases = 0;
  for (const Lattice& L : distributive_corpus(3))
    for_each_split(L, [&](const Subset& I, const Subset& J) {
      if ((I & J).none() || !check_equal(L, I, J).verdict) return;
      const auto rep = check_linear(L, I, J);
      EXPECT_EQ(rep.verdict, has_linear_resolution(intersect(hibi_ideal(L, I), hibi_ideal(L, J))));
      EXPECT_EQ(rep.witnesses.empty(), rep.dual_witnesses.empty());
      ++cases;
    });
  EXPECT_GT(cases, 50);
}

TEST(CheckLinear, LinearSample) {
  const auto s = linear_sample();
  const auto hull = segment_hull(s.segment, s.lattice);
  EXPECT_TRUE(check_linear(s.lattice, hull.ideal, hull.coideal, true).verdict);
  EXPECT_TRUE(has_linear_resolution(hibi_ideal(s.lattice, s.segment, s.vars)));
}

TEST(CheckLinear, NonlinearSample) {
  const auto s = nonlinear_sample();
  const auto hull = segment_hull(s.segment, s.lattice);
  const auto rep = check_linear(s.lattice, hull.ideal, hull.coideal, true);
  EXPECT_FALSE(rep.verdict);
  ASSERT_EQ(rep.witnesses.size(), 1u);
  EXPECT_EQ(rep.witnesses[0].elements, (std::vector<int>{s.lattice.top(), s.lattice.bottom()}));
  EXPECT_FALSE(has_linear_resolution(hibi_ideal(s.lattice, s.segment, s.vars)));
}

TEST(CheckLinear, RejectsDisjointAndUnequal) {
  const Lattice L = boolean_lattice(2);
  EXPECT_THROW(check_linear(L, make_subset(4, {0, 1, 2}), make_subset(4, {3})), PreconditionViolated);
  EXPECT_THROW(check_linear(L, make_subset(4, {0, 1}), make_subset(4, {1, 2, 3})), PreconditionViolated);
}

TEST(CheckLinear, JsonReport) {
  const auto s = nonlinear_sample();
  const auto hull = segment_hull(s.segment, s.lattice);
  const auto j = check_linear(s.lattice, hull.ideal, hull.coideal).to_json();
  EXPECT_EQ(j["verdict"], false);
  EXPECT_EQ(j["witnesses"].size(), 1u);
}

TEST(EmptyCase, RankSplits) {
  const Lattice L = lattice_of_ideals(sample());
  for (int k = 0; k < L.rank(); ++k) {
    const auto rb = rank_band(L, 0, k);
    const Subset J = ~rb.ideal;
    const auto e = empty_case(L, rb.ideal, J, true);
    EXPECT_TRUE(e.certificate_matches);
    EXPECT_TRUE(e.degrees_ok);
    EXPECT_EQ(e.expected_degree, 5);
    EXPECT_TRUE(has_linear_resolution(e.intersection));
  }
}

TEST(EmptyCase, CrossingCoversCounted) {
  const Lattice L = boolean_lattice(2);
  const auto e = empty_case(L, make_subset(4, {0}), make_subset(4, {1, 2, 3}));
  EXPECT_EQ(e.crossing_covers.size(), 2u);
  EXPECT_EQ(e.intersection.num_gens(), 2u);
  EXPECT_THROW(empty_case(L, make_subset(4, {0, 1}), make_subset(4, {1, 3, 2})), PreconditionViolated);
}

TEST(DPlusOne, EdgeIdeals) {
  // I = (ab), J = (bc): I + J is linear, I n J = (abc) of degree 3
  const VarSpace v = VarSpace::plain(3);
  const MonomialIdeal I(v, {SquarefreeMonomial{0b011}});
  const MonomialIdeal J(v, {SquarefreeMonomial{0b110}});
  EXPECT_TRUE(lemma_d_plus_1_property(I, J));
  const MonomialIdeal K(v, {SquarefreeMonomial{0b001}});
  EXPECT_THROW(lemma_d_plus_1_property(I, K), PreconditionViolated);
}

TEST(BooleanBand, ClosedFormMatchesOracle) {
  for (int r = 2; r <= 4; ++r) {
    const Lattice L = boolean_lattice(r);
    const auto table = graded_betti_oracle(hibi_ideal(L, interior(L)));
    EXPECT_EQ(table, boolean_band_betti(r)) << r;
  }
  EXPECT_THROW(boolean_band_betti(1), BadRank);
}

TEST(BooleanBand, ThreeByHand) {
  const auto t = boolean_band_betti(3);
  EXPECT_EQ(t(0, 3), 6);
  EXPECT_EQ(t(1, 4), 6);
  EXPECT_EQ(t(2, 6), 1);
  EXPECT_EQ(t.entries().size(), 3u);
}

TEST(Interior, DropsEnds) {
  const Lattice L = lattice_of_ideals(sample());
  const Subset s = interior(L);
  EXPECT_EQ(s.count(), 8u);
  EXPECT_FALSE(s.test(L.bottom()));
  EXPECT_FALSE(s.test(L.top()));
}

TEST(Bipartite, RecognitionMatchesReisner) {
  int graphs = 0;
  for (int n = 1; n <= 3; ++n)
    for (Mask edges = 0; edges < (Mask{1} << n * n); ++edges) {
      std::vector<std::pair<int, int>> e;
      for (int k = 0; k < n * n; ++k)
        if (edges >> k & 1) e.emplace_back(k / n, k % n);
      const BipartiteGraph g(n, n, e);
      if (g.has_isolated_vertex()) {
        EXPECT_THROW(recognize_cm_bipartite(g), PreconditionViolated);
        continue;
      }
      const bool cm = is_cohen_macaulay(independence_complex(g));
      const auto lab = recognize_cm_bipartite(g);
      EXPECT_EQ(lab.has_value(), cm);
      if (lab)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) EXPECT_EQ(g.edge(i, lab->partner[j]), lab->poset.leq(i, j));
      ++graphs;
    }
  EXPECT_GT(graphs, 200);
}

TEST(Bipartite, Errors) {
  EXPECT_THROW(BipartiteGraph(2, 3, {}), SizeMismatch);
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 2}}), GroundSetMismatch);
  const BipartiteGraph big(11, 11, {});
  EXPECT_THROW(recognize_cm_bipartite(big), TooLarge);
}

TEST(Unmixed, SamplesViaTheorem) {
  for (const auto& s : {linear_sample(), nonlinear_sample()}) {
    const auto d = complex_of_segment(s.lattice, s.segment, s.vars);
    const auto r = theorem_unmixed(d);
    ASSERT_TRUE(r.segment.has_value());
    EXPECT_TRUE(r.witnesses.empty());
    EXPECT_EQ(r.segment->count(), s.segment.count());
    EXPECT_EQ(r.generator_supports, supports_of(hibi_ideal(s.lattice, s.segment, s.vars)));
    EXPECT_TRUE(is_unmixed(d));
  }
}

TEST(Unmixed, EverySegmentRecovered) {
  for (const Lattice& L : distributive_corpus(3)) {
    const VarSpace v = VarSpace::hibi_for(L.irreducibles());
    for (const Subset& s : lattice_segments(L)) {
      const auto d = complex_of_segment(L, s, v);
      const auto rec = recover_segment(d);
      ASSERT_TRUE(rec.has_value());
      EXPECT_EQ(rec->generator_supports, supports_of(hibi_ideal(L, s, v)));
      EXPECT_TRUE(is_segment(rec->segment, rec->lattice));
      EXPECT_EQ(rec->segment.count(), s.count());
    }
  }
}

TEST(Unmixed, IsolatedVertexNeedsSearch) {
  // the top of B_2 alone: H* = (x1, x2) has no mixed edges
  const Lattice L = boolean_lattice(2);
  const VarSpace v = VarSpace::hibi_for(L.irreducibles());
  const auto d = complex_of_segment(L, make_subset(4, {3}), v);
  EXPECT_THROW(theorem_unmixed(d), NotCMBipartiteBase);
  const auto rec = recover_segment(d);
  ASSERT_TRUE(rec.has_value());
  EXPECT_FALSE(rec->via_theorem);
  EXPECT_EQ(rec->generator_supports, (std::vector<Mask>{0b0011}));
}

TEST(Unmixed, PathGivesChainSegment) {
  // x1 - y1 - x2 - y2
  const SimplicialComplex d(4, {0b0101, 0b0110, 0b1010});
  const auto r = theorem_unmixed(d);
  ASSERT_TRUE(r.segment.has_value());
  const auto H = hibi_ideal(r.lattice, *r.segment);
  EXPECT_EQ(supports_of(dual_star(H)), d.facets());
}

TEST(Unmixed, MixedCoverSizesGiveWitnesses) {
  // edges x1y1, x2y1, x2y2 and the facet x1x2
  const SimplicialComplex d(4, {0b0011, 0b0101, 0b0110, 0b1010});
  std::set<int> sizes;
  for (Mask c : oracle::minimal_covers(d.facets(), 4)) sizes.insert(popcount(c));
  EXPECT_EQ(sizes, (std::set<int>{2, 3}));
  const auto r = theorem_unmixed(d);
  EXPECT_FALSE(r.segment.has_value());
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_FALSE(is_unmixed(d));
  EXPECT_FALSE(recover_segment(d).has_value());
}

TEST(Unmixed, EmptyYSideCover) {
  // edges x1y1, x2y2 and the facet y1y2: covers x1y2, y1x2, y1y2 give {a, b, bottom} of B_2
  const SimplicialComplex d(4, {0b0101, 0b1010, 0b1100});
  const auto r = theorem_unmixed(d);
  ASSERT_TRUE(r.segment.has_value());
  EXPECT_EQ(r.segment->count(), 3u);
  EXPECT_TRUE(r.segment->test(r.lattice.bottom()));
}

TEST(Unmixed, RecoveredSegmentsReproduceComplex) {
  // For arbitrary subsets the theorem either rejects or returns a segment
  // (possibly of another lattice) whose H* is the facet ideal.
  int accepted = 0;
  for (const Lattice& L : distributive_corpus(3)) {
    const VarSpace v = VarSpace::hibi_for(L.irreducibles());
    const int n = L.size();
    if (n > 10) continue;
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
      const Subset s = subset_from_mask(n, m);
      const auto d = complex_of_segment(L, s, v);
      try {
        const auto r = theorem_unmixed(d);
        if (!r.segment) {
          EXPECT_FALSE(r.witnesses.empty());
          EXPECT_FALSE(is_segment(s, L));
          continue;
        }
        EXPECT_EQ(supports_of(dual_star(hibi_ideal(r.lattice, *r.segment))), d.facets());
        ++accepted;
      } catch (const NotCMBipartiteBase&) {
      }
    }
  }
  EXPECT_GT(accepted, 0);
}

TEST(Unmixed, OddVertexCount) {
  EXPECT_THROW(theorem_unmixed(SimplicialComplex(3, {0b011})), SizeMismatch);
  EXPECT_THROW(recover_segment(SimplicialComplex(3, {0b011})), SizeMismatch);
}
