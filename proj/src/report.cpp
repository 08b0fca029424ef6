#include "integrable/verify.hpp"

#include "json.hpp"

#include <cstdio>

namespace integrable {

std::string report_json(const VerifyReport& report, bool timing, int indent) {
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& it : report.items) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : it.params) params[k] = v;
    nlohmann::ordered_json j;
    j["id"] = it.id;
    j["params"] = params;
    j["status"] = it.pass ? "pass" : "fail";
    j["residual"] = it.pass ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(it.residual);
    j["elapsedMs"] = timing ? it.elapsed_ms : 0.0;
    items.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["suite"] = report.suite;
  out["items"] = std::move(items);
  return out.dump(indent);
}

std::string report_text(const VerifyReport& report, bool timing) {
  std::string out;
  double total = 0;
  for (const auto& it : report.items) {
    out += it.pass ? "PASS " : "FAIL ";
    out += it.id;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.1f ms)", it.elapsed_ms);
      out += buf;
    }
    if (!it.pass) out += "\n  residual: " + it.residual;
    out += '\n';
    total += it.elapsed_ms;
  }
  out += report.suite + ": " + std::to_string(report.items.size() - report.failures()) + "/" +
         std::to_string(report.items.size()) + " passed";
  if (timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " in %.2f s", total / 1000);
    out += buf;
  }
  out += '\n';
  return out;
}

}  // namespace integrable
