// One line per acceptance criterion; exits nonzero if any fails.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "hibilab/sweep.hpp"

using namespace hibilab;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> sweeps;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Boolean lattice Betti numbers", {"boolean"}, 5},
      {2, "Boolean lattice without bottom and top", {"top-and-bottom"}, 10},
      {3, "linear and nonlinear samples", {"samples"}, 5},
      {4, "equality criterion", {"equal"}, 60},
      {5, "linearity criterion", {"linear"}, 120},
      {6, "disjoint splits", {"empty"}, 60},
      {7, "resolution validity", {"resolutions"}, 120},
      {8, "comparison isomorphism", {"iso"}, 10},
      {9, "duality suite", {"duality"}, 120},
      {10, "unmixed round trip", {"unmixed"}, 120},
  };
  const SweepOptions opt;  // posets up to 4 elements, 200 complexes on at most 8 vertices
  int failed = 0;
  for (const auto& c : criteria) {
    bool pass = true;
    double seconds = 0;
    std::string detail;
    for (const auto& name : c.sweeps) {
      SweepResult r;
      try {
        r = run_sweep(name, opt);
      } catch (const std::exception& e) {
        r.name = name;
        r.mismatch(std::string("exception: ") + e.what());
      }
      pass = pass && r.ok() && r.cases > 0;
      seconds += r.seconds;
      if (!detail.empty()) detail += "; ";
      detail += std::to_string(r.cases) + " cases, " + std::to_string(r.mismatches) + " mismatches";
      for (const auto& [k, v] : r.tallies) detail += ", " + k + " " + std::to_string(v);
      for (const auto& ex : r.examples) std::cerr << "  criterion " << c.number << " mismatch: " << ex << "\n";
    }
    const bool in_time = seconds < c.limit_seconds;
    pass = pass && in_time;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", seconds, c.limit_seconds);
    std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << " (" << c.title << ") " << detail
              << ", " << timing << "\n";
    failed += pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
