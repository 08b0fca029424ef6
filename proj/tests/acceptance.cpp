// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails or runs over its time limit.

#include "integrable/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace integrable;

namespace {

struct Run {
  std::string suite;
  int order;
  int max_n;  // -1: suite default
  int trials = -1;
};

struct Criterion {
  int id;
  std::string what;
  std::vector<Run> runs;
  double limit_s;
};

bool check(const Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t items = 0;
  std::string first_failure;
  for (const auto& r : c.runs) {
    VerifyOptions o;
    o.order = r.order;
    if (r.max_n >= 0) o.max_n = r.max_n;
    o.trials = r.trials;
    VerifyReport rep = run_suite(r.suite, o);
    items += rep.items.size();
    for (const auto& it : rep.items)
      if (!it.pass && first_failure.empty()) first_failure = it.id + ": " + it.residual.substr(0, 200);
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = s < c.limit_s;
  bool ok = first_failure.empty() && in_time;
  std::printf("%s criterion %d: %s [%zu items, %.2f s, limit %.0f s]\n", ok ? "PASS" : "FAIL", c.id, c.what.c_str(),
              items, s, c.limit_s);
  if (!first_failure.empty()) std::printf("  first failure: %s\n", first_failure.c_str());
  if (!in_time) std::printf("  over the time limit\n");
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Gelfand-Dickii f0, f1 and residue = recursion for k <= 5", {{"gd", 8, 5}}, 10},
      {2, "KdV equation and [delta_m, delta_n] u = 0 for m, n <= 3", {{"kdv", 8, 3}}, 60},
      {3, "Toda structure at N=8 for n <= 6", {{"structure", 8, 6}, {"ddd", 8, 6}}, 120},
      {4, "Kupershmidt identities for n <= 5 at N=8", {{"kupershmidt", 8, 5}}, 300},
      {5, "dispersionless p0 against the Legendre closed form for n <= 8", {{"legendre", 8, 8}}, 10},
      {6, "Schouten symmetry, Jacobi and the bihamiltonian pair at N=6",
       {{"schouten", 6, -1, 50}, {"bihamiltonian", 6, -1}}, 300},
      {7, "ladders and involution of h_n at N=8", {{"magri", 8, 4}}, 300},
      {8, "second hierarchy g0, g1, solve_g at N=8", {{"gladder", 8, -1, 20}}, 600},
      {9, "cohomology representatives closed at N=8", {{"cohomology", 8, -1}}, 60},
  };
  int failed = 0;
  for (const auto& c : criteria) failed += check(c) ? 0 : 1;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
