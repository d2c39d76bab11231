#include "paulipf/report.hpp"

#include <cstdio>

namespace paulipf {

CheckResult make_check(std::string name, double err, double tol) {
  return {std::move(name),
          err <= tol ? CheckStatus::Pass : CheckStatus::Fail, err};
}

CheckResult make_info(std::string name, double err) {
  return {std::move(name), CheckStatus::Info, err};
}

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Info: return "INFO";
  }
  return "?";
}

static std::string format_err(double err) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", err);
  return buf;
}

void print_checks(std::ostream& os, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    os << "CHECK " << c.name << ' ' << status_word(c.status) << ' '
       << format_err(c.max_abs_error) << '\n';
}

void write_checks_csv(std::ostream& os,
                      const std::vector<CheckResult>& checks) {
  os << "name,status,max_abs_error\n";
  for (const auto& c : checks)
    os << c.name << ',' << status_word(c.status) << ','
       << format_err(c.max_abs_error) << '\n';
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

void append(std::vector<CheckResult>& into, std::vector<CheckResult> more) {
  for (auto& c : more) into.push_back(std::move(c));
}

}  // namespace paulipf
