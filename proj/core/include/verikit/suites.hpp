#pragma once

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace verikit::suites {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckRecord {
  std::string id;         // statement reference, stable across runs
  std::string inputs;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::Fail;
  std::string skip_reason;  // every skip carries a budget or scope reason
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  double wall_seconds = 0;
  unsigned passed = 0, failed = 0, skipped = 0;

  bool ok() const { return failed == 0; }
  nlohmann::json to_json() const;
};

// Suite ids: lemmas, braid, thm-agl, thm-s4, thm-nonsolv-small, table1,
// ritt, dynamics, polyexamples.
std::vector<std::string> suite_ids();
SuiteReport run_suite(const std::string& id, unsigned jobs = 1,
                      double budget_seconds = 0);

struct RealizabilityResult {
  std::string status;  // realizable / out-of-scope / no-tuple
  bool reality_obstruction = false;
  std::string detail;
};
RealizabilityResult table1_realizability(const std::string& row_key);

}  // namespace verikit::suites
