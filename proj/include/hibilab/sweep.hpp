#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hibilab/analysis.hpp"
#include "hibilab/betti.hpp"
#include "hibilab/corpus.hpp"
#include "hibilab/resolution.hpp"
#include "hibilab/simplicial.hpp"

namespace hibilab {

struct SweepOptions {
  int max_poset = 4;          ///< corpus: posets with at most this many elements
  int complexes = 200;        ///< random complexes for the duality suite
  int max_vertices = 8;
  std::uint32_t seed = 20240607;
  OracleOptions oracle{};
};

struct SweepResult {
  std::string name;
  long cases = 0;
  long mismatches = 0;
  std::map<std::string, long> tallies;  ///< extra counters, e.g. rejected inputs
  std::vector<std::string> examples;    ///< first few mismatches
  double seconds = 0;

  bool ok() const { return mismatches == 0; }

  void mismatch(const std::string& what) {
    ++mismatches;
    if (examples.size() < 5) examples.push_back(what);
  }

  /// Counts one case and records a mismatch when `good` is false.
  void expect(bool good, const std::function<std::string()>& what) {
    ++cases;
    if (!good) mismatch(what());
  }

  std::string summary() const {
    std::ostringstream out;
    out << name << ": " << cases << " cases, " << mismatches << " mismatches";
    for (const auto& [k, v] : tallies) out << ", " << k << " " << v;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << " (" << seconds << " s)";
    return out.str();
  }

  nlohmann::json to_json() const {
    return {{"name", name}, {"cases", cases}, {"mismatches", mismatches}, {"tallies", tallies},
            {"examples", examples}, {"seconds", seconds}};
  }
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string describe(const Lattice& L, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (int e : members_of(s)) {
    out += (first ? "" : ",") + L.name(e);
    first = false;
  }
  return out + "}";
}

inline std::string describe_lattice(const Lattice& L) {
  const Poset& p = L.irreducibles();
  std::string out = "J(P) with |P|=" + std::to_string(p.size()) + " covers [";
  bool first = true;
  for (auto [a, b] : p.covers()) {
    out += (first ? "" : " ") + p.name(a) + "<" + p.name(b);
    first = false;
  }
  return out + "]";
}

/// (I, J) with I a poset ideal, J a poset coideal and I u J = L. J ranges
/// over complements of ideals contained in I.
template <typename F>
void for_each_split(const Lattice& L, F&& f) {
  const auto ideals = lattice_ideals(L);
  for (const auto& I : ideals)
    for (const auto& K : ideals)
      if (is_subset(mask_from_subset(K), mask_from_subset(I))) f(I, Subset(~K));
}

/// Oracle linearity per segment mask, for one lattice.
class LinearityCache {
 public:
  LinearityCache(const Lattice& L, const OracleOptions& opt) : L_(L), opt_(opt) {}
  bool operator()(const Subset& s) {
    const Mask m = mask_from_subset(s);
    auto it = cache_.find(m);
    if (it == cache_.end()) it = cache_.emplace(m, has_linear_resolution(hibi_ideal(L_, s), opt_)).first;
    return it->second;
  }

 private:
  const Lattice& L_;
  OracleOptions opt_;
  std::map<Mask, bool> cache_;
};

}  // namespace detail

/// Equality criterion against the computed intersection, over every split of
/// every distributive lattice of the corpus.
inline SweepResult sweep_equal(const SweepOptions& opt = {}) {
  detail::Stopwatch clock;
  SweepResult res{"equal"};
  for (const auto& L : distributive_corpus(opt.max_poset)) {
    std::map<Mask, MonomialIdeal> H;
    auto hibi = [&](const Subset& s) -> const MonomialIdeal& {
      const Mask m = mask_from_subset(s);
      auto it = H.find(m);
      if (it == H.end()) it = H.emplace(m, hibi_ideal(L, s)).first;
      return it->second;
    };
    detail::for_each_split(L, [&](const Subset& I, const Subset& J) {
      const bool verdict = check_equal(L, I, J).verdict;
      const bool actual = hibi(I & J) == intersect(hibi(I), hibi(J));
      res.tallies[verdict ? "equal" : "not equal"]++;
      res.expect(verdict == actual, [&] {
        return detail::describe_lattice(L) + " I=" + detail::describe(L, I) + " J=" + detail::describe(L, J);
      });
    });
  }
  res.seconds = clock.seconds();
  return res;
}

/// Linearity criterion in both forms against the oracle, over splits with
/// H_{I n J} = H_I n H_J and I n J nonempty.
inline SweepResult sweep_linear(const SweepOptions& opt = {}) {
  detail::Stopwatch clock;
  SweepResult res{"linear"};
  for (const auto& L : distributive_corpus(opt.max_poset)) {
    detail::LinearityCache linear(L, opt.oracle);
    detail::for_each_split(L, [&](const Subset& I, const Subset& J) {
      if ((I & J).none() || !check_equal(L, I, J).verdict) return;
      auto where = [&] { return detail::describe_lattice(L) + " I=" + detail::describe(L, I) + " J=" + detail::describe(L, J); };
      bool verdict = false;
      try {
        verdict = check_linear(L, I, J).verdict;
      } catch (const CrosscheckFailure& e) {
        res.expect(false, [&] { return where() + ": " + e.what(); });
        return;
      }
      res.tallies[verdict ? "linear" : "not linear"]++;
      res.expect(verdict == linear(I & J), [&] { return where() + ": criterion says " + (verdict ? "linear" : "not linear"); });
    });
  }
  res.seconds = clock.seconds();
  return res;
}

/// Disjoint splits: certificate equals the intersection, degrees are
/// rank + 1, the oracle confirms linearity, and the (d+1)-linearity lemma
/// holds on (H_I, H_J).
inline SweepResult sweep_empty(const SweepOptions& opt = {}) {
  detail::Stopwatch clock;
  SweepResult res{"empty"};
  for (const auto& L : distributive_corpus(opt.max_poset)) {
    for (const auto& I : lattice_ideals(L)) {
      const Subset J = ~I;
      if (I.none() || J.none()) continue;
      auto where = [&] { return detail::describe_lattice(L) + " I=" + detail::describe(L, I); };
      const EmptySplit e = empty_case(L, I, J);
      res.expect(e.certificate_matches, [&] { return where() + ": certificate differs from the intersection"; });
      res.expect(e.degrees_ok, [&] { return where() + ": a generator has the wrong degree"; });
      res.expect(has_linear_resolution(e.intersection, opt.oracle), [&] { return where() + ": intersection not linear"; });
      const VarSpace vars = VarSpace::hibi_for(L.irreducibles());
      res.expect(lemma_d_plus_1_property(hibi_ideal(L, I, vars), hibi_ideal(L, J, vars), opt.oracle),
                 [&] { return where() + ": (d+1)-linearity lemma fails"; });
    }
  }
  res.seconds = clock.seconds();
  return res;
}

/// The explicit resolution for every nonempty poset ideal of every corpus
/// lattice: d^2 = 0, minimality, exactness and Betti numbers against the
/// oracle. Also the lcm law on each full lattice.
inline SweepResult sweep_resolutions(const SweepOptions& opt = {}) {
  detail::Stopwatch clock;
  SweepResult res{"resolutions"};
  for (const auto& L : distributive_corpus(opt.max_poset)) {
    auto law = lcm_law_violation(L);
    res.expect(!law, [&] { return detail::describe_lattice(L) + ": " + law.value_or(""); });
    for (const auto& I : lattice_ideals(L)) {
      if (I.none()) continue;
      auto where = [&] { return detail::describe_lattice(L) + " ideal " + detail::describe(L, I); };
      const ResolutionComplex r = hhz_resolution(L, I);
      const MonomialIdeal H = hibi_ideal(L, I, r.vars);
      res.expect(differential_squares_to_zero(r), [&] { return where() + ": d^2 != 0"; });
      res.expect(is_minimal(r), [&] { return where() + ": not minimal"; });
      res.expect(exactness_check(r, H, opt.oracle.field), [&] { return where() + ": not exact"; });
      res.expect(betti_from_resolution(r) == graded_betti_oracle(H, opt.oracle),
                 [&] { return where() + ": Betti numbers differ from the oracle"; });
    }
  }
  res.seconds = clock.seconds();
  return res;
}

/// Lattices for the comparison-map check: B_2, B_3 and the first five
/// non-Boolean lattices of the corpus with at least four elements.
inline std::vector<Lattice> iso_lattices(int max_poset = 4) {
  std::vector<Lattice> out{boolean_lattice(2), boolean_lattice(3)};
  for (auto& L : distributive_corpus(max_poset)) {
    if (out.size() == 7) break;
    if (L.size() >= 4 && !is_boolean(L)) out.push_back(std::move(L));
  }
  return out;
}

/// The comparison map from the dual resolution is a degreewise bijection and a
/// chain map under two linear extensions; ranks and verdicts agree between them.
inline SweepResult sweep_iso(const SweepOptions& opt = {}) {
  detail::Stopwatch clock;
  SweepResult res{"iso"};
  for (const auto& L : iso_lattices(opt.max_poset)) {
    const Poset& P = L.irreducibles();
    const auto orders = std::vector<std::vector<int>>{default_linear_extension(P), alternate_linear_extension(P)};
    std::vector<std::vector<long long>> ranks, dual_ranks;
    std::vector<BettiTable> tables;
    std::vector<std::vector<bool>> verdicts;
    std::vector<std::vector<DifferentialEntry>> entries;
    for (const auto& ord : orders) {
      auto where = [&] { return detail::describe_lattice(L) + " under a linear extension"; };
      const ComparisonMap m = iso_pi(L, ord);
      res.expect(m.bijective, [&] { return where() + ": comparison map not bijective"; });
      res.expect(m.degrees_match, [&] { return where() + ": comparison map changes degrees"; });
      res.expect(m.chain_map, [&] { return where() + ": comparison map is not a chain map"; });
      const auto f = hhz_resolution(L, ord);
      const auto fd = dual_resolution(L, ord);
      ranks.push_back(f.ranks());
      dual_ranks.push_back(fd.ranks());
      tables.push_back(betti_from_resolution(f));
      verdicts.push_back({differential_squares_to_zero(f), differential_squares_to_zero(fd), is_minimal(f),
                          exactness_check(f, hibi_ideal(L, L.full_subset(), f.vars), opt.oracle.field)});
      std::vector<DifferentialEntry> all;
      for (const auto& d : f.differentials) all.insert(all.end(), d.begin(), d.end());
      entries.push_back(std::move(all));
    }
    res.expect(ranks[0] == ranks[1] && dual_ranks[0] == dual_ranks[1],
               [&] { return detail::describe_lattice(L) + ": ranks depend on the linear extension"; });
    res.expect(tables[0] == tables[1], [&] { return detail::describe_lattice(L) + ": Betti numbers depend on the linear extension"; });
    res.expect(verdicts[0] == verdicts[1] && verdicts[0] == std::vector<bool>(4, true),
               [&] { return detail::describe_lattice(L) + ": verdicts depend on the linear extension"; });
    long flips = 0;
    for (std::size_t k = 0; k < entries[0].size() && k < entries[1].size(); ++k)
      if (entries[0][k].sign != entries[1][k].sign) ++flips;
    res.tallies["sign flips"] += flips;
  }
  res.seconds = clock.seconds();
  return res;
}

/// Duality identities on random complexes: double dual, prime decomposition,
/// cover and complement descriptions of the dual ideal, complements of
/// minimal covers, the intersection rule for dual ideals, Eagon-Reiner, and
/// linear quotients implying Cohen-Macaulay.
inline SweepResult sweep_duality(const SweepOptions& opt = {}) {
  detail::Stopwatch clock;
  SweepResult res{"duality"};
  std::mt19937 rng(opt.seed);
  for (int k = 0; k < opt.complexes; ++k) {
    const SimplicialComplex d = random_complex(rng, opt.max_vertices);
    const SimplicialComplex e = random_complex_on(rng, d.num_vertices());
    const VarSpace& vars = d.vars();
    const int n = d.num_vertices();
    auto where = [&] { return "complex #" + std::to_string(k) + " on " + std::to_string(n) + " vertices"; };
    const SimplicialComplex dual = alexander_dual(d);
    const MonomialIdeal I = stanley_reisner_ideal(d);
    const MonomialIdeal Idual = stanley_reisner_ideal(dual);

    res.expect(alexander_dual(dual) == d, [&] { return where() + ": double dual differs"; });

    MonomialIdeal primes = MonomialIdeal::unit(vars);
    for (Mask f : d.facets()) primes = intersect(primes, MonomialIdeal::prime(vars, vars.all() & ~f));
    res.expect(primes == I, [&] { return where() + ": prime decomposition differs"; });

    std::vector<SquarefreeMonomial> cover_gens;
    for (Mask c : minimal_vertex_covers(complex_of_facet_ideal(I), 4096)) cover_gens.emplace_back(c);
    res.expect(MonomialIdeal(vars, cover_gens) == Idual, [&] { return where() + ": cover description differs"; });
    res.expect(facet_ideal(complement_complex(d)) == Idual, [&] { return where() + ": complement description differs"; });
    res.expect(dual_star(I) == Idual, [&] { return where() + ": dual of the ideal differs"; });

    std::vector<Mask> comp;
    for (Mask c : minimal_vertex_covers(d, 4096)) comp.push_back(vars.all() & ~c);
    std::sort(comp.begin(), comp.end());
    std::vector<Mask> gamma = complex_of_ideal(facet_ideal(d)).facets();
    std::sort(gamma.begin(), gamma.end());
    res.expect(comp == gamma, [&] { return where() + ": minimal cover complements differ from facets"; });

    const MonomialIdeal J = stanley_reisner_ideal(e);
    res.expect(dual_star(intersect(I, J)) == sum(dual_star(I), dual_star(J)),
               [&] { return where() + ": dual of an intersection differs from the sum"; });

    const bool cm = is_cohen_macaulay(d, Field::rationals);
    const bool lin = has_linear_resolution(Idual, opt.oracle);
    res.tallies[cm ? "cohen-macaulay" : "not cohen-macaulay"]++;
    res.expect(cm == lin, [&] { return where() + ": Cohen-Macaulay " + (cm ? "yes" : "no") + " but dual ideal linear " + (lin ? "yes" : "no"); });

    if (Idual.is_equigenerated() && Idual.num_gens() <= 12) {
      const auto q = has_linear_quotients(Idual);
      if (q.verdict == QuotientsVerdict::found) {
        res.tallies["linear quotients"]++;
        res.expect(cm, [&] { return where() + ": linear quotients without Cohen-Macaulay"; });
      }
    }
  }
  res.seconds = clock.seconds();
  return res;
}

/// True when the mixed facets of a complex on V u V' fail to be a
/// Cohen-Macaulay bipartite graph covering every vertex, decided without the
/// labeling search: facet sizes, isolated vertices, then Reisner on the
/// independence complex of the graph.
inline bool bipartite_base_fails(const SimplicialComplex& d) {
  const int n = d.num_vertices() / 2;
  const Mask left = low_bits(n), right = left << n;
  std::vector<Mask> edges;
  Mask touched = 0;
  for (Mask f : d.facets()) {
    if ((f & left) == 0 || (f & right) == 0) continue;
    if (popcount(f) != 2) return true;
    edges.push_back(f);
    touched |= f;
  }
  if (touched != (left | right)) return true;
  const SimplicialComplex g(d.vars(), edges);
  return !is_cohen_macaulay(complex_of_ideal(facet_ideal(g)), Field::rationals);
}

/// Complex whose facet ideal is the dual of H_S, on x-vertices 0..n-1 and
/// y-vertices n..2n-1.
inline SimplicialComplex complex_of_segment(const Lattice& L, const Subset& s) {
  return complex_of_facet_ideal(dual_star(hibi_ideal(L, s)));
}

inline std::set<Mask> supports_of(const MonomialIdeal& I) {
  std::set<Mask> out;
  for (auto g : I.gens()) out.insert(g.support());
  return out;
}

/// Recovery of every segment of every corpus lattice from the complex of its
/// dual Hibi ideal, plus the two sample segments. The theorem's construction
/// must apply exactly when the bipartite hypothesis holds (checked
/// independently); the remaining complexes go through the poset search.
inline SweepResult sweep_unmixed(const SweepOptions& opt = {}) {
  detail::Stopwatch clock;
  SweepResult res{"unmixed"};
  auto run = [&](const Lattice& L, const Subset& s, const std::string& label) {
    const SimplicialComplex d = complex_of_segment(L, s);
    const std::set<Mask> want = supports_of(hibi_ideal(L, s));
    auto where = [&] { return label + " segment " + detail::describe(L, s); };
    const bool outside = bipartite_base_fails(d);
    bool threw = false;
    try {
      (void)theorem_unmixed(d);
    } catch (const NotCMBipartiteBase&) {
      threw = true;
    }
    res.expect(threw == outside, [&] { return where() + ": theorem hypothesis check disagrees with the brute-force check"; });
    const auto r = recover_segment(d);
    res.expect(r.has_value(), [&] { return where() + ": not recovered"; });
    if (!r) return;
    res.tallies[r->via_theorem ? "via theorem" : "via search"]++;
    const std::set<Mask> got(r->generator_supports.begin(), r->generator_supports.end());
    res.expect(got == want && r->segment.count() == s.count(), [&] { return where() + ": recovered a different ideal"; });
    res.expect(is_segment(r->segment, r->lattice), [&] { return where() + ": recovered set is not a segment"; });
  };
  for (const auto& L : distributive_corpus(opt.max_poset))
    for (const auto& s : lattice_segments(L)) run(L, s, detail::describe_lattice(L));
  for (const auto& sample : {linear_sample(), nonlinear_sample()}) {
    const long before = res.tallies["via theorem"];
    run(sample.lattice, sample.segment, "sample " + detail::describe_lattice(sample.lattice));
    res.expect(res.tallies["via theorem"] == before + 1,
               [&] { return "sample segment of " + detail::describe_lattice(sample.lattice) + " not recovered by the theorem"; });
  }
  res.seconds = clock.seconds();
  return res;
}

/// Betti numbers of H_{B_r} from the explicit resolution against the closed
/// form C(r,i) 2^(r-i) in degree r+i, and against the oracle.
inline SweepResult sweep_boolean(const SweepOptions& opt = {}, std::vector<int> ranks = {2, 3, 4}) {
  detail::Stopwatch clock;
  SweepResult res{"boolean"};
  for (int r : ranks) {
    const Lattice B = boolean_lattice(r);
    const ResolutionComplex f = hhz_resolution(B);
    BettiTable closed;
    for (int i = 0; i <= r; ++i) closed.add_graded(i, r + i, binomial(r, i) << (r - i));
    const BettiTable got = betti_from_resolution(f);
    res.expect(got == closed, [&] { return "B_" + std::to_string(r) + ": resolution differs from the closed form"; });
    res.expect(graded_betti_oracle(hibi_ideal(B, B.full_subset(), f.vars), opt.oracle) == closed,
               [&] { return "B_" + std::to_string(r) + ": oracle differs from the closed form"; });
  }
  res.seconds = clock.seconds();
  return res;
}

/// H_{B_r minus bottom and top} against its closed form.
inline SweepResult sweep_band(const SweepOptions& opt = {}, std::vector<int> ranks = {2, 3, 4}) {
  detail::Stopwatch clock;
  SweepResult res{"top-and-bottom"};
  for (int r : ranks) {
    const Lattice B = boolean_lattice(r);
    const BettiTable got = graded_betti_oracle(hibi_ideal(B, interior(B)), opt.oracle);
    const BettiTable want = boolean_band_betti(r);
    res.expect(got == want, [&] { return "B_" + std::to_string(r) + ": oracle differs from the closed form"; });
    res.expect(got(r - 1, 2 * r) == 1, [&] { return "B_" + std::to_string(r) + ": top syzygy missing"; });
  }
  res.seconds = clock.seconds();
  return res;
}

/// Over the corpus: H of L minus bottom and top is linear iff L is not
/// Boolean (for |L| > 2).
inline SweepResult sweep_interior(const SweepOptions& opt = {}) {
  detail::Stopwatch clock;
  SweepResult res{"interior"};
  for (const auto& L : distributive_corpus(opt.max_poset)) {
    if (L.size() <= 2) continue;
    const bool lin = has_linear_resolution(hibi_ideal(L, interior(L)), opt.oracle);
    res.expect(lin == !is_boolean(L), [&] { return detail::describe_lattice(L) + ": interior linear " + (lin ? "yes" : "no"); });
  }
  res.seconds = clock.seconds();
  return res;
}

/// Upper semimodular lattices from bounded extensions of small posets:
/// distributive iff H_L has linear quotients iff a linear resolution iff its
/// first syzygies all sit one degree above the generators.
inline SweepResult sweep_main(const SweepOptions& opt = {}) {
  detail::Stopwatch clock;
  SweepResult res{"semimodular"};
  for (const auto& L : bounded_lattice_corpus(opt.max_poset)) {
    if (!is_upper_semimodular(L)) {
      res.tallies["not semimodular"]++;
      continue;
    }
    const MonomialIdeal H = hibi_ideal(L, L.full_subset());
    const bool dist = is_distributive(L);
    const auto q = has_linear_quotients(H);
    const BettiTable t = graded_betti_oracle(H, opt.oracle);
    const int d = L.irreducibles().size();
    const bool lin = t.is_linear(d);
    bool relations = true;
    for (const auto& [key, v] : t.entries())
      if (key.first == 1 && key.second != d + 1 && v != 0) relations = false;
    auto where = [&] { return "lattice with " + std::to_string(L.size()) + " elements, distributive " + (dist ? "yes" : "no"); };
    res.tallies[dist ? "distributive" : "not distributive"]++;
    res.expect(q.verdict != QuotientsVerdict::unknown, [&] { return where() + ": linear quotients undecided"; });
    res.expect(dist == (q.verdict == QuotientsVerdict::found), [&] { return where() + ": linear quotients disagree"; });
    res.expect(dist == lin, [&] { return where() + ": linear resolution disagrees"; });
    res.expect(dist == relations, [&] { return where() + ": linear relations disagree"; });
  }
  res.seconds = clock.seconds();
  return res;
}

/// The two sample segments: the first is linear with a linear-quotient order,
/// the second is not, and an exhaustive search finds no order.
inline SweepResult sweep_samples(const SweepOptions& opt = {}) {
  detail::Stopwatch clock;
  SweepResult res{"samples"};
  const auto a = linear_sample();
  const auto b = nonlinear_sample();
  const MonomialIdeal Ha = hibi_ideal(a.lattice, a.segment, a.vars);
  const MonomialIdeal Hb = hibi_ideal(b.lattice, b.segment, b.vars);
  res.expect(Ha.num_gens() == 8 && Ha.generator_degree() == 4, [] { return "first sample: wrong generators"; });
  res.expect(Hb.num_gens() == 6 && Hb.generator_degree() == 3, [] { return "second sample: wrong generators"; });
  res.expect(has_linear_resolution(Ha, opt.oracle), [] { return "first sample: not linear"; });
  res.expect(!has_linear_resolution(Hb, opt.oracle), [] { return "second sample: linear"; });
  const auto qa = has_linear_quotients(Ha);
  res.expect(qa.verdict == QuotientsVerdict::found && is_linear_quotient_order(Ha, qa.order),
             [] { return "first sample: no linear quotient order"; });
  res.expect(has_linear_quotients(Hb).verdict == QuotientsVerdict::none,
             [] { return "second sample: search did not exhaustively fail"; });
  res.seconds = clock.seconds();
  return res;
}

inline const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names{"equal", "linear", "empty", "resolutions", "iso", "duality", "unmixed",
                                              "boolean", "top-and-bottom", "interior", "semimodular", "samples"};
  return names;
}

inline SweepResult run_sweep(const std::string& name, const SweepOptions& opt = {}) {
  if (name == "equal") return sweep_equal(opt);
  if (name == "linear") return sweep_linear(opt);
  if (name == "empty") return sweep_empty(opt);
  if (name == "resolutions") return sweep_resolutions(opt);
  if (name == "iso") return sweep_iso(opt);
  if (name == "duality") return sweep_duality(opt);
  if (name == "unmixed") return sweep_unmixed(opt);
  if (name == "boolean") return sweep_boolean(opt);
  if (name == "top-and-bottom") return sweep_band(opt);
  if (name == "interior") return sweep_interior(opt);
  if (name == "semimodular") return sweep_main(opt);
  if (name == "samples") return sweep_samples(opt);
  throw PreconditionViolated("unknown sweep '" + name + "'");
}

}  // namespace hibilab
