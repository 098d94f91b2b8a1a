#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hibilab/hibilab.hpp"

using namespace hibilab;
using nlohmann::json;

namespace {

struct Globals {
  bool json = false;
  bool char2 = false;
  bool crosscheck = false;

  OracleOptions oracle() const { return {20, char2 ? Field::char2 : Field::rationals}; }
  Field field() const { return char2 ? Field::char2 : Field::rationals; }
};

/// Exit status 1: the mathematical answer is "no" and a witness was printed.
constexpr int kFalse = 1;

struct LatticeSource {
  std::string poset;
  std::string lattice;

  void add_to(CLI::App* sub) {
    sub->add_option("--poset,--lattice-from-poset", poset, "poset file; the lattice is J(P)");
    sub->add_option("--lattice", lattice, "lattice file");
  }

  Lattice load() const {
    if (poset.empty() == lattice.empty()) throw PreconditionViolated("give exactly one of --poset and --lattice");
    std::vector<std::string> warnings;
    Lattice L = poset.empty() ? read_lattice(lattice, &warnings) : lattice_of_ideals(read_poset(poset, &warnings));
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return L;
  }
};

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += (out.empty() ? "" : " ") + t;
  return out;
}

json names_of(const Lattice& L, const Subset& s) {
  json a = json::array();
  for (int e : members_of(s)) a.push_back(L.name(e));
  return a;
}

std::string list_of(const Lattice& L, const Subset& s) {
  std::string out;
  for (int e : members_of(s)) out += (out.empty() ? "" : " ") + L.name(e);
  return out.empty() ? "(none)" : out;
}

json ideal_json(const MonomialIdeal& I) {
  json g = json::array();
  for (auto m : I.gens()) g.push_back(to_string(m, I.vars()));
  return {{"vars", I.vars().names()}, {"generators", g}};
}

json complex_json(const SimplicialComplex& d) {
  json f = json::array();
  for (Mask m : d.facets()) {
    json face = json::array();
    for_each_bit(m, [&](int v) { face.push_back(d.vars().name(v)); });
    f.push_back(face);
  }
  return {{"vertices", d.vars().names()}, {"facets", f}};
}

std::string face_text(const SimplicialComplex& d, Mask m) {
  if (m == 0) return "{}";
  std::string out;
  for_each_bit(m, [&](int v) { out += (out.empty() ? "" : " ") + d.vars().name(v); });
  return out;
}

MonomialIdeal read_ideal_input(const std::string& path) {
  if (path.empty() || path == "-") return parse_ideal(std::cin);
  auto in = open_input(path);
  return parse_ideal(in);
}

void print_report(const CriterionReport& r, const Globals& g) {
  if (g.json) {
    std::cout << r.to_json().dump(2) << "\n";
    return;
  }
  std::cout << r.theorem << ": " << (r.verdict ? "true" : "false") << "\n";
  for (const auto& w : r.witnesses) std::cout << "witness: " << w.description << "\n";
  for (const auto& w : r.dual_witnesses) std::cout << "dual witness: " << w.description << "\n";
}

/// The (I, J) pair for the criterion commands: a rank band, or an ideal and a
/// coideal given by generating elements (closed downward and upward).
struct SplitSpec {
  std::vector<int> band;
  std::vector<std::string> ideal;
  std::vector<std::string> coideal;

  void add_to(CLI::App* sub) {
    sub->add_option("--band", band, "ranks i j: ideal = ranks <= j, coideal = ranks >= i")->expected(2);
    sub->add_option("--ideal", ideal, "elements generating the poset ideal (closed downward)");
    sub->add_option("--coideal", coideal, "elements generating the coideal (closed upward)");
  }

  std::pair<Subset, Subset> resolve(const Lattice& L, bool coideal_defaults_to_complement = false) const {
    if (!band.empty()) {
      if (!ideal.empty() || !coideal.empty()) throw PreconditionViolated("--band excludes --ideal and --coideal");
      const RankBand rb = rank_band(L, band[0], band[1]);
      return {rb.ideal, rb.coideal};
    }
    if (ideal.empty()) throw PreconditionViolated("give --band or --ideal");
    const Subset I = lattice_down_closure(L, parse_element_list(join(ideal), L));
    if (coideal.empty()) {
      if (!coideal_defaults_to_complement) throw PreconditionViolated("give --coideal");
      return {I, ~I};
    }
    return {I, lattice_up_closure(L, parse_element_list(join(coideal), L))};
  }
};

int run_ideals(const LatticeSource& src, const Globals& g) {
  const Lattice L = src.load();
  if (g.json) {
    json a = json::array();
    for (int e = 0; e < L.size(); ++e) a.push_back(L.name(e));
    std::cout << json{{"count", L.size()}, {"ideals", a}}.dump(2) << "\n";
    return 0;
  }
  std::cout << L.size() << " ideals\n";
  for (int e = 0; e < L.size(); ++e) std::cout << L.name(e) << "\n";
  return 0;
}

int run_birkhoff(const LatticeSource& src, const Globals& g) {
  const Lattice L = src.load();
  const Birkhoff b = birkhoff(L);
  const bool dist = is_distributive(L);
  if (g.crosscheck && dist != satisfies_distributive_law(L))
    throw CrosscheckFailure("distributivity via the embedding disagrees with the distributive law");
  auto label = [&](Mask m) {
    std::string s = "{";
    bool first = true;
    for_each_bit(m, [&](int p) {
      s += (first ? "" : ",") + b.irreducibles.name(p);
      first = false;
    });
    return s + "}";
  };
  if (g.json) {
    json covers = json::array(), emb = json::object();
    for (auto [a, c] : b.irreducibles.covers()) covers.push_back({b.irreducibles.name(a), b.irreducibles.name(c)});
    for (int e = 0; e < L.size(); ++e) emb[L.name(e)] = label(b.labels[e]);
    json names = json::array();
    for (int p = 0; p < b.irreducibles.size(); ++p) names.push_back(b.irreducibles.name(p));
    std::cout << json{{"distributive", dist}, {"join_irreducibles", names}, {"covers", covers}, {"embedding", emb}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "distributive: " << (dist ? "yes" : "no") << "\n";
  std::cout << "join-irreducibles:";
  for (int p = 0; p < b.irreducibles.size(); ++p) std::cout << ' ' << b.irreducibles.name(p);
  std::cout << "\n";
  for (auto [a, c] : b.irreducibles.covers()) std::cout << b.irreducibles.name(a) << " < " << b.irreducibles.name(c) << "\n";
  for (int e = 0; e < L.size(); ++e) std::cout << L.name(e) << " -> " << label(b.labels[e]) << "\n";
  return 0;
}

VarSpace vars_for(const Lattice& L, const std::vector<std::string>& ynames) {
  return VarSpace::hibi_for(L.irreducibles(), ynames);
}

int run_hibi(const LatticeSource& src, const std::vector<std::string>& seg, const std::vector<std::string>& ynames,
             const Globals& g) {
  const Lattice L = src.load();
  const Subset s = parse_element_list(join(seg), L);
  if (!is_segment(s, L)) std::cerr << "warning: the subset is not a segment\n";
  const MonomialIdeal H = hibi_ideal(L, s, vars_for(L, ynames));
  if (g.json)
    std::cout << ideal_json(H).dump(2) << "\n";
  else
    std::cout << format_ideal(H);
  return 0;
}

void print_betti(const BettiTable& t, const std::string& method, const Globals& g) {
  if (g.json)
    std::cout << json{{"method", method}, {"betti", t.to_json()}}.dump(2) << "\n";
  else
    std::cout << t.to_text();
}

int run_betti(const LatticeSource& src, const std::string& ideal_path, const std::vector<std::string>& seg,
              const std::string& emit, const Globals& g) {
  if (src.poset.empty() && src.lattice.empty()) {
    if (!emit.empty()) throw PreconditionViolated("--emit-complex needs a lattice and a poset ideal");
    print_betti(graded_betti_oracle(read_ideal_input(ideal_path), g.oracle()), "oracle", g);
    return 0;
  }
  const Lattice L = src.load();
  const Subset s = seg.empty() ? L.full_subset() : parse_element_list(join(seg), L);
  const MonomialIdeal H = hibi_ideal(L, s);
  std::optional<ResolutionComplex> r;
  try {
    r = hhz_resolution(L, s);
  } catch (const NotMeetClosed&) {
  } catch (const PreconditionViolated&) {
  }
  if (!emit.empty()) {
    if (!r) throw PreconditionViolated("the explicit resolution needs a meet-closed subset whose lower neighbors are covers");
    std::ofstream out(emit);
    if (!out) throw PreconditionViolated("cannot write " + emit);
    out << to_json(*r, L).dump(2) << "\n";
  }
  if (r && is_minimal(*r)) {
    const BettiTable t = betti_from_resolution(*r);
    if (g.crosscheck) {
      if (!differential_squares_to_zero(*r) || !exactness_check(*r, H, g.field()))
        throw CrosscheckFailure("the explicit complex is not a resolution of the ideal");
      if (!(t == graded_betti_oracle(H, g.oracle()))) throw CrosscheckFailure("resolution and oracle Betti numbers differ");
    }
    print_betti(t, "resolution", g);
    return 0;
  }
  print_betti(graded_betti_oracle(H, g.oracle()), "oracle", g);
  return 0;
}

int run_dual(const std::string& complex_path, const std::string& ideal_path, const Globals& g) {
  if (!complex_path.empty()) {
    const SimplicialComplex d = alexander_dual(read_complex(complex_path));
    if (g.json)
      std::cout << complex_json(d).dump(2) << "\n";
    else
      std::cout << format_complex(d);
    return 0;
  }
  const MonomialIdeal I = dual_star(read_ideal_input(ideal_path));
  if (g.json)
    std::cout << ideal_json(I).dump(2) << "\n";
  else
    std::cout << format_ideal(I);
  return 0;
}

int run_covers(const std::string& path, std::size_t cap, const Globals& g) {
  const SimplicialComplex d = read_complex(path);
  const auto covers = minimal_vertex_covers(d, cap);
  const bool unmixed = is_unmixed(d, cap);
  if (g.json) {
    json c = json::array();
    for (Mask m : covers) {
      json face = json::array();
      for_each_bit(m, [&](int v) { face.push_back(d.vars().name(v)); });
      c.push_back(face);
    }
    std::cout << json{{"covers", c}, {"unmixed", unmixed}}.dump(2) << "\n";
    return 0;
  }
  for (Mask m : covers) std::cout << face_text(d, m) << "\n";
  std::cout << "unmixed: " << (unmixed ? "yes" : "no") << "\n";
  return 0;
}

int run_check(bool linear, const LatticeSource& src, const SplitSpec& split, const Globals& g) {
  const Lattice L = src.load();
  const auto [I, J] = split.resolve(L);
  const CriterionReport r = linear ? check_linear(L, I, J, g.crosscheck, g.oracle()) : check_equal(L, I, J, g.crosscheck);
  print_report(r, g);
  return r.verdict ? 0 : kFalse;
}

int run_empty_split(const LatticeSource& src, const SplitSpec& split, const Globals& g) {
  const Lattice L = src.load();
  const auto [I, J] = split.resolve(L, true);
  const EmptySplit e = empty_case(L, I, J, g.crosscheck, g.oracle());
  const bool ok = e.certificate_matches && e.degrees_ok;
  if (g.json) {
    json covers = json::array();
    for (auto [q, p] : e.crossing_covers) covers.push_back({L.name(q), L.name(p)});
    std::cout << json{{"intersection", ideal_json(e.intersection)}, {"certificate", ideal_json(e.certificate)},
                      {"crossing_covers", covers}, {"expected_degree", e.expected_degree},
                      {"certificate_matches", e.certificate_matches}, {"degrees_ok", e.degrees_ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "ideal: " << list_of(L, I) << "\ncoideal: " << list_of(L, J) << "\n";
    std::cout << "intersection generators:";
    for (auto m : e.intersection.gens()) std::cout << ' ' << to_string(m, e.intersection.vars());
    std::cout << "\ncertificate generators:";
    for (auto m : e.certificate.gens()) std::cout << ' ' << to_string(m, e.certificate.vars());
    std::cout << "\ncrossing covers:";
    for (auto [q, p] : e.crossing_covers) std::cout << ' ' << L.name(q) << '<' << L.name(p);
    std::cout << "\nexpected degree: " << e.expected_degree << "\n";
    std::cout << "certificate matches: " << (e.certificate_matches ? "yes" : "no") << "\n";
    std::cout << "degrees ok: " << (e.degrees_ok ? "yes" : "no") << "\n";
  }
  return ok ? 0 : kFalse;
}

int run_band_betti(int r, const Globals& g) {
  const BettiTable t = boolean_band_betti(r);
  if (g.crosscheck) {
    const Lattice B = boolean_lattice(r);
    if (!(graded_betti_oracle(hibi_ideal(B, interior(B)), g.oracle()) == t))
      throw CrosscheckFailure("closed form differs from the oracle");
  }
  print_betti(t, "closed form", g);
  return 0;
}

int run_classify(const std::string& path, const Globals& g) {
  const SimplicialComplex d = read_complex(path);
  if (d.num_vertices() % 2 != 0) throw SizeMismatch("a bipartite graph file needs 2n vertices, x-side first");
  const int n = d.num_vertices() / 2;
  const Mask left = low_bits(n);
  std::vector<std::pair<int, int>> edges;
  for (Mask f : d.facets()) {
    if (popcount(f) != 2 || popcount(f & left) != 1) throw PreconditionViolated("every facet must be an edge between the two sides");
    edges.emplace_back(lowest_bit(f & left), lowest_bit(f & ~left) - n);
  }
  const BipartiteGraph graph(n, n, edges);
  const auto lab = recognize_cm_bipartite(graph);
  if (g.crosscheck && graph.has_isolated_vertex() == false) {
    const bool cm = is_cohen_macaulay(complex_of_ideal(facet_ideal(d)), g.field());
    if (cm != lab.has_value()) throw CrosscheckFailure("labeling search disagrees with the Reisner check");
  }
  if (g.json) {
    json out{{"cohen_macaulay_bipartite", lab.has_value()}};
    if (lab) {
      json covers = json::array();
      for (auto [a, b] : lab->poset.covers()) covers.push_back({d.vars().name(a), d.vars().name(b)});
      json partner = json::object();
      for (int i = 0; i < n; ++i) partner[d.vars().name(i)] = d.vars().name(n + lab->partner[i]);
      out["order"] = covers;
      out["partner"] = partner;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "cohen-macaulay bipartite: " << (lab ? "yes" : "no") << "\n";
    if (lab) {
      for (int i = 0; i < n; ++i) std::cout << d.vars().name(i) << " ~ " << d.vars().name(n + lab->partner[i]) << "\n";
      for (auto [a, b] : lab->poset.covers()) std::cout << d.vars().name(a) << " < " << d.vars().name(b) << "\n";
    } else if (graph.has_isolated_vertex()) {
      std::cout << "witness: isolated vertex\n";
    } else {
      std::cout << "witness: no perfect matching makes the edge relation a partial order\n";
    }
  }
  return lab ? 0 : kFalse;
}

int run_segment_of_complex(const std::string& path, bool strict, const Globals& g) {
  const SimplicialComplex d = read_complex(path);
  std::optional<SegmentRecovery> rec;
  std::vector<Witness> witnesses;
  if (strict) {
    UnmixedResult r = theorem_unmixed(d);
    witnesses = r.witnesses;
    if (r.segment) rec = SegmentRecovery{std::move(r.lattice), *r.segment, true, r.generator_supports};
  } else {
    rec = recover_segment(d);
    if (!rec) {
      try {
        witnesses = theorem_unmixed(d).witnesses;
      } catch (const NotCMBipartiteBase& e) {
        witnesses.push_back({std::string("no poset makes the minimal vertex covers a segment; ") + e.what(), {}});
      }
    }
  }
  auto face = [&](Mask m) { return face_text(d, m); };
  if (g.json) {
    json out{{"found", rec.has_value()}};
    if (rec) {
      json gens = json::array();
      for (Mask m : rec->generator_supports) gens.push_back(face(m));
      out["method"] = rec->via_theorem ? "theorem" : "search";
      out["segment"] = names_of(rec->lattice, rec->segment);
      out["generators"] = gens;
    }
    json w = json::array();
    for (const auto& x : witnesses) w.push_back(x.description);
    out["witnesses"] = w;
    std::cout << out.dump(2) << "\n";
  } else if (rec) {
    std::cout << "method: " << (rec->via_theorem ? "theorem" : "search") << "\n";
    const Poset& P = rec->lattice.irreducibles();
    for (auto [a, b] : P.covers()) std::cout << "x" << a + 1 << " < x" << b + 1 << "\n";
    std::cout << "segment: " << list_of(rec->lattice, rec->segment) << "\n";
    for (Mask m : rec->generator_supports) std::cout << "generator: " << face(m) << "\n";
  } else {
    std::cout << "no segment\n";
    for (const auto& w : witnesses) std::cout << "witness: " << w.description << "\n";
  }
  return rec ? 0 : kFalse;
}

int run_sweeps(std::vector<std::string> names, const SweepOptions& opt, bool timing, const Globals& g) {
  if (names.empty()) names = sweep_names();
  SweepOptions o = opt;
  o.oracle = g.oracle();
  bool ok = true;
  json all = json::array();
  for (const auto& n : names) {
    SweepResult r = run_sweep(n, o);
    if (!timing) r.seconds = 0;
    ok = ok && r.ok();
    if (g.json) {
      json j = r.to_json();
      if (!timing) j.erase("seconds");
      all.push_back(j);
      continue;
    }
    std::string line = r.summary();
    if (!timing) line = line.substr(0, line.rfind(" ("));
    std::cout << line << "\n";
    for (const auto& e : r.examples) std::cout << "  mismatch: " << e << "\n";
  }
  if (g.json) std::cout << all.dump(2) << "\n";
  return ok ? 0 : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hibi ideals of lattice segments: resolutions, Betti numbers and linearity criteria"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "emit JSON");
  app.add_flag("--char2", g.char2, "rank computations over GF(2) instead of the rationals");
  app.add_flag("--debug-crosscheck", g.crosscheck, "also run the brute-force checks and fail on disagreement");

  LatticeSource src;
  std::vector<std::string> seg, ynames;
  std::string ideal_path, complex_path, emit;
  SplitSpec split;
  int rank = 0;
  std::size_t cover_cap = 25;
  bool strict = false, timing = false;
  std::vector<std::string> sweeps;
  SweepOptions sweep_opt;

  auto* ideals = app.add_subcommand("ideals", "list the poset ideals of P, i.e. the elements of J(P)");
  src.add_to(ideals);
  auto* bk = app.add_subcommand("birkhoff", "join-irreducibles and the canonical embedding of a lattice");
  src.add_to(bk);
  auto* hibi = app.add_subcommand("hibi", "Hibi ideal of a subset of a lattice, in ideal text format");
  src.add_to(hibi);
  hibi->add_option("--segment", seg, "elements: names, {a,b} label sets, indices, or all")->required();
  hibi->add_option("--y-names", ynames, "names for the y-variables (x-variables then use the poset's names)");
  auto* betti = app.add_subcommand("betti", "graded Betti numbers of an ideal (stdin or --ideal) or of H_S");
  src.add_to(betti);
  betti->add_option("--ideal", ideal_path, "ideal file; '-' or omitted reads stdin");
  betti->add_option("--segment", seg, "subset of the lattice (default: all)");
  betti->add_option("--emit-complex", emit, "write the explicit resolution as JSON to this file");
  auto* dual = app.add_subcommand("dual", "Alexander dual of a complex, or the dual of a squarefree ideal");
  dual->add_option("--complex", complex_path, "complex file");
  dual->add_option("--ideal", ideal_path, "ideal file; '-' reads stdin");
  auto* covers = app.add_subcommand("covers", "minimal vertex covers of a complex and unmixedness");
  covers->add_option("--complex", complex_path, "complex file")->required();
  covers->add_option("--facet-cap", cover_cap, "refuse complexes with more facets");
  auto* ceq = app.add_subcommand("check-equal", "decide H_{I n J} = H_I n H_J for a split I u J = L");
  src.add_to(ceq);
  split.add_to(ceq);
  auto* clin = app.add_subcommand("check-linear", "decide linearity of H_I n H_J");
  src.add_to(clin);
  split.add_to(clin);
  auto* emp = app.add_subcommand("empty-split", "generators of H_I n H_J for a disjoint split");
  src.add_to(emp);
  split.add_to(emp);
  auto* band = app.add_subcommand("band-betti", "closed-form Betti table of H of B_r minus bottom and top");
  band->add_option("--rank", rank, "rank r >= 2")->required();
  auto* cls = app.add_subcommand("classify-graph", "recognize a Cohen-Macaulay bipartite graph");
  cls->add_option("--graph", complex_path, "graph in complex format, 2n vertices with the x-side first")->required();
  auto* soc = app.add_subcommand("segment-of-complex", "recover a lattice segment S with H*_S = I(complex)");
  soc->add_option("--complex", complex_path, "complex file, 2n vertices with the x-side first")->required();
  soc->add_flag("--strict", strict, "only the theorem's construction (no poset search)");
  auto* sw = app.add_subcommand("sweep", "run verification sweeps");
  sw->add_option("names", sweeps, "sweeps to run (default: all)");
  sw->add_option("--max-poset", sweep_opt.max_poset, "corpus: posets with at most this many elements");
  sw->add_option("--complexes", sweep_opt.complexes, "random complexes for the duality sweep");
  sw->add_option("--seed", sweep_opt.seed, "random seed");
  sw->add_flag("--timing", timing, "print run times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ideals) return run_ideals(src, g);
    if (*bk) return run_birkhoff(src, g);
    if (*hibi) return run_hibi(src, seg, ynames, g);
    if (*betti) return run_betti(src, ideal_path, seg, emit, g);
    if (*dual) {
      if (complex_path.empty() == ideal_path.empty() && !complex_path.empty())
        throw PreconditionViolated("give --complex or --ideal, not both");
      return run_dual(complex_path, ideal_path, g);
    }
    if (*covers) return run_covers(complex_path, cover_cap, g);
    if (*ceq) return run_check(false, src, split, g);
    if (*clin) return run_check(true, src, split, g);
    if (*emp) return run_empty_split(src, split, g);
    if (*band) return run_band_betti(rank, g);
    if (*cls) return run_classify(complex_path, g);
    if (*soc) return run_segment_of_complex(complex_path, strict, g);
    if (*sw) return run_sweeps(sweeps, sweep_opt, timing, g);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
