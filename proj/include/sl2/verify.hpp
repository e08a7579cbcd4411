#pragma once

#include <string>
#include <vector>

#include "sl2/config.hpp"

namespace sl2 {

struct CriterionResult {
  int id = 0;
  std::string suite;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

// A report file produced by a criterion: name relative to the output directory.
struct Artifact {
  std::string name;
  std::string content;
};

struct SuiteReport {
  std::vector<CriterionResult> criteria;
  std::vector<Artifact> artifacts;

  bool passed() const;
};

// specfun, principal, discrete, plancherel, prop2, eq3, prop7, phi
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);  // also accepts "all"
std::vector<int> suite_criteria(const std::string& name);

// Runs one acceptance criterion (1..12). A criterion passes when its numeric
// check holds and it finished within its time budget.
CriterionResult run_criterion(int id, const RunConfig& cfg, std::vector<Artifact>* artifacts);
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

// "PASS  [ 1] title: detail (0.01 s / 1 s)"
std::string summary_line(const CriterionResult& r);

// Writes the artifacts and report.csv or report.json (no timings, so that
// identical configurations give identical files) into cfg.out_dir.
void write_reports(const SuiteReport& report, const RunConfig& cfg);

}  // namespace sl2
