#ifndef QUENCH_REPORT_HPP
#define QUENCH_REPORT_HPP

// Property report: the acceptance criteria and the per-module invariant
// suites, each evaluated to a pass/fail line with a short numeric detail.

#include <ostream>
#include <string>
#include <vector>

#include "quench/core.hpp"

namespace quench::report {

struct CheckResult {
  // "criterion_<n>" or "<module>/<property>".
  std::string id;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Acceptance criterion n in 1..8; criterion 9 aggregates the full report
/// and is produced by run_report().
CheckResult criterion(int n, Exec exec = Exec::Serial);

/// Invariant suites of every module.
std::vector<CheckResult> invariant_suites(Exec exec = Exec::Serial);

/// Criteria 1..8, the invariant suites, then criterion 9: all invariant
/// suites pass and the whole report took under three minutes.
std::vector<CheckResult> run_report(Exec exec = Exec::Serial);

/// CSV: check,status,seconds,detail.
void write_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace quench::report

#endif  // QUENCH_REPORT_HPP
