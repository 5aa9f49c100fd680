#pragma once

#include <string>
#include <vector>

namespace localspec {

enum class CheckKind {
  tolerance,  // measured <= tolerance
  exact,      // measured counts mismatches; must be 0
  report      // informational value, always passes
};

struct CheckResult {
  std::string suite;
  int criterion;  // acceptance criterion this check belongs to (1-8)
  std::string name;
  CheckKind kind;
  double measured;
  double tolerance;
  bool passed;
};

/// "specfun", "gamma", "padic", "mellin", or "all". Throws
/// std::invalid_argument for other names.
std::vector<CheckResult> run_suite(const std::string& suite);

std::vector<std::string> suite_names();

/// "exact", "pass", "FAIL" or "report".
std::string status_label(const CheckResult& r);

}  // namespace localspec
