#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace paulipf {

enum class CheckStatus { Pass, Fail, Info };

/// One verification line: `CHECK <name> <PASS|FAIL|INFO> <max-abs-error>`.
/// INFO lines document known divergences between printed reference values
/// and the value the algebra forces; they never fail a run.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  double max_abs_error = 0.0;
};

CheckResult make_check(std::string name, double err, double tol);
CheckResult make_info(std::string name, double err);

const char* status_word(CheckStatus s);

void print_checks(std::ostream& os, const std::vector<CheckResult>& checks);

/// Same fields, comma-separated, one line per check.
void write_checks_csv(std::ostream& os, const std::vector<CheckResult>& checks);

bool all_pass(const std::vector<CheckResult>& checks);

void append(std::vector<CheckResult>& into, std::vector<CheckResult> more);

}  // namespace paulipf
