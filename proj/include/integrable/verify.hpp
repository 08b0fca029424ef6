#pragma once

// Verification suites: every identity the engine claims, checked exactly.

#include "integrable/todaop.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace integrable {

struct VerifyItem {
  std::string id;
  std::map<std::string, long long> params;
  bool pass = false;
  /// Nonzero residual (or error text) when the item fails.
  std::string residual;
  double elapsed_ms = 0;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyItem> items;
  bool ok() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  int order = 8;
  /// Suite-specific default when unset.
  std::optional<int> max_n;
  std::uint64_t seed = 0;
  /// Random trials for property items; suite default when negative.
  int trials = -1;
};

/// gd kdv structure ddd kupershmidt legendre commute schouten bihamiltonian magri gladder cohomology
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
VerifyReport run_suite(const std::string& name, const VerifyOptions& opts);

/// Shared Toda context per eps order.
std::shared_ptr<const TodaLattice> toda_lattice(int order);

/// {suite, items: [{id, params, status, residual, elapsedMs}]}. Without
/// timing every elapsedMs is 0, which makes the output reproducible.
std::string report_json(const VerifyReport& report, bool timing = true, int indent = 2);
/// Human-readable listing, one line per item plus a summary.
std::string report_text(const VerifyReport& report, bool timing = true);

/// A random density of the given odd degree with a few small terms.
SuperPoly random_density(std::mt19937_64& rng, int odd_degree);

}  // namespace integrable
