// integrable: compute Gelfand-Dickii polynomials, Toda Lax coefficients and
// Hamiltonians, and run the verification suites.

#include "integrable/psdo.hpp"
#include "integrable/shift.hpp"
#include "integrable/todaop.hpp"
#include "integrable/variational.hpp"
#include "integrable/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <set>

using namespace integrable;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  int eps_order = 8;
  int max_n = -1;
  bool json = false;
  std::uint64_t seed = 0;
  bool quick = false;
  bool no_timing = false;
  CLI::Option* eps_opt = nullptr;
  CLI::Option* max_n_opt = nullptr;

  int order() const {
    int n = (quick && eps_opt->count() == 0) ? 4 : eps_order;
    return TruncOrder(n).value();
  }
  std::optional<int> maxn() const {
    if (max_n_opt->count() > 0) return max_n;
    if (quick) return 3;
    return std::nullopt;
  }
  VerifyOptions verify_options() const {
    VerifyOptions o;
    o.order = order();
    o.max_n = maxn();
    o.seed = seed;
    return o;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int emit_reports(const Globals& g, const std::vector<VerifyReport>& reports, const std::string& name) {
  VerifyReport all;
  all.suite = name;
  for (const auto& r : reports)
    for (const auto& it : r.items) all.items.push_back(it);
  const VerifyReport& out = reports.size() == 1 ? reports.front() : all;
  if (g.json)
    std::cout << report_json(out, !g.no_timing) << '\n';
  else
    std::cout << report_text(out, !g.no_timing);
  return out.ok() ? 0 : kExitFail;
}

int run_suites(const Globals& g, const std::vector<std::string>& suites, const std::string& name) {
  std::vector<VerifyReport> reports;
  for (const auto& s : suites) reports.push_back(run_suite(s, g.verify_options()));
  return emit_reports(g, reports, name);
}

int cmd_gd(const Globals& g, int k, const std::string& method, bool verify) {
  if (k < 0) throw UsageError("--k must be non-negative");
  SuperPoly f = method == "recursion" ? gelfand_dickii_recursion(k) : gelfand_dickii_residue(k);
  bool ok = true;
  if (verify) {
    SuperPoly other = method == "recursion" ? gelfand_dickii_residue(k) : gelfand_dickii_recursion(k);
    ok = other == f && f.constant_term().is_zero();
  }
  if (g.json) {
    json j{{"k", k}, {"method", method}, {"f", f.str()}};
    if (verify) j["verified"] = ok;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << f.str() << '\n';
    if (verify) std::cerr << (ok ? "residue and recursion agree\n" : "residue and recursion DISAGREE\n");
  }
  return ok ? 0 : kExitFail;
}

int cmd_kdv_flow(const Globals& g, int k, const std::string& poly, bool verify) {
  if (k < 0) throw UsageError("--k must be non-negative");
  SuperPoly p = SuperPoly::parse(poly);
  SuperPoly r = kdv_flow(k, p);
  bool ok = true;
  if (verify) {
    // against the recursion path: delta_k u = d f_k
    SuperPoly vf = derive_t(gelfand_dickii_recursion(k));
    ok = apply_evolutionary(vf, SuperPoly(), p) == r;
  }
  if (g.json) {
    json j{{"k", k}, {"input", p.str()}, {"result", r.str()}};
    if (verify) j["verified"] = ok;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << r.str() << '\n';
  }
  return ok ? 0 : kExitFail;
}

int cmd_toda_pk(const Globals& g, int n, int k) {
  if (n < 0) throw UsageError("--n must be non-negative");
  auto toda = toda_lattice(g.order());
  SuperPoly p = toda->p(k, n);
  if (g.json)
    std::cout << json{{"n", n}, {"k", k}, {"epsOrder", g.order()}, {"p", p.str()}}.dump(2) << '\n';
  else
    std::cout << (p.is_zero() ? "0" : p.str()) << '\n';
  return 0;
}

int cmd_toda_ham(const Globals& g, int n) {
  if (n < 0) throw UsageError("--n must be non-negative");
  auto toda = toda_lattice(g.order());
  Functional h = toda->hamiltonian(n);
  if (g.json) {
    std::cout << json{{"n", n}, {"epsOrder", g.order()}, {"density", h.density().str()},
                      {"delta_u", h.du().str()}, {"delta_v", h.dv().str()}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << h.str() << '\n';
  }
  return 0;
}

int cmd_solve_g(const Globals& g, int k, int max_ord, int max_deg) {
  if (k < 1) throw UsageError("--k must be at least 1");
  const int order = g.order();
  auto toda = toda_lattice(order);
  SolveGOptions opts;
  opts.max_diff_order = max_ord;
  opts.max_u_degree = max_deg;
  Functional prev = build_g0(order);
  SolveGResult res;
  for (int j = 1; j <= k; ++j) {
    res = solve_g(j, prev, toda->hamiltonian(j - 1), order, opts);
    prev = res.g;
  }
  bool ok = res.nontrivial_kernel.empty();
  if (g.json) {
    json kernel = json::array();
    for (const auto& z : res.nontrivial_kernel) kernel.push_back(z.density().str());
    std::cout << json{{"k", k},
                      {"epsOrder", order},
                      {"g", res.g.density().str()},
                      {"basisSize", res.basis_size},
                      {"equations", res.equations},
                      {"rank", res.rank},
                      {"nontrivialKernel", kernel}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << res.g.str() << '\n';
    std::cerr << "basis " << res.basis_size << ", equations " << res.equations << ", rank " << res.rank << '\n';
    for (const auto& z : res.nontrivial_kernel) std::cerr << "kernel direction: " << z.str() << '\n';
  }
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the KdV and Toda hierarchies"};
  app.require_subcommand(1);
  Globals g;
  g.eps_opt = app.add_option("--eps-order", g.eps_order, "eps truncation order N (even)")->capture_default_str();
  g.max_n_opt = app.add_option("--max-n", g.max_n, "largest index checked by the suites");
  app.add_flag("--json", g.json, "emit JSON");
  app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
  app.add_flag("--quick", g.quick, "N=4 and max-n=3 unless given explicitly");
  app.add_flag("--no-timing", g.no_timing, "report elapsedMs as 0");

  int k = 0, n = 0, max_ord = -1, max_deg = -1;
  std::string method = "residue", poly = "u_0", suite;
  bool verify = false;

  auto* gd = app.add_subcommand("gd", "Gelfand-Dickii polynomial f_k");
  gd->add_option("--k", k, "index")->required();
  gd->add_option("--method", method, "residue or recursion")->check(CLI::IsMember({"residue", "recursion"}));
  gd->add_flag("--verify", verify, "cross-check both methods");

  auto* kdv = app.add_subcommand("kdv-flow", "apply the KdV flow delta_k");
  kdv->add_option("--k", k, "index")->required();
  kdv->add_option("--poly", poly, "input polynomial")->capture_default_str();
  kdv->add_flag("--verify", verify, "cross-check against the recursion path");

  auto* toda = app.add_subcommand("toda", "Toda lattice");
  toda->require_subcommand(1);
  auto* pk = toda->add_subcommand("pk", "coefficient p_k(n) of L^n");
  pk->add_option("--n", n, "power")->required();
  pk->add_option("--k", k, "Lambda degree")->required();
  auto* ham = toda->add_subcommand("ham", "Hamiltonian h_n");
  ham->add_option("--n", n, "index")->required();
  auto* tverify = toda->add_subcommand("verify", "run a Toda suite");
  tverify->add_option("--suite", suite, "suite")
      ->required()
      ->check(CLI::IsMember({"kupershmidt", "ddd", "legendre", "commute", "structure"}));

  auto* var = app.add_subcommand("var", "variational calculus");
  var->require_subcommand(1);
  auto* vverify = var->add_subcommand("verify", "run a variational suite");
  vverify->add_option("--suite", suite, "suite")
      ->required()
      ->check(CLI::IsMember({"schouten", "bihamiltonian", "magri", "gladder", "cohomology"}));
  auto* solve = var->add_subcommand("solve-g", "solve for g_k");
  solve->add_option("--k", k, "index")->required();
  solve->add_option("--max-ord", max_ord, "largest differential order in the basis");
  solve->add_option("--max-deg", max_deg, "largest number of u-jets in the basis");

  auto* all = app.add_subcommand("verify-all", "run every suite");

  for (auto* sub : {gd, kdv, toda, pk, ham, tverify, var, vverify, solve, all}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    (void)g.order();
    if (*gd) return cmd_gd(g, k, method, verify);
    if (*kdv) return cmd_kdv_flow(g, k, poly, verify);
    if (*pk) return cmd_toda_pk(g, n, k);
    if (*ham) return cmd_toda_ham(g, n);
    if (*tverify || *vverify) return run_suites(g, {suite}, suite);
    if (*solve) return cmd_solve_g(g, k, max_ord, max_deg);
    if (*all) return run_suites(g, suite_names(), "all");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
