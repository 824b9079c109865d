#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kmchev {

struct SelftestOptions {
  /// Comma-separated scenario names; nullopt runs all, an empty list runs none.
  std::optional<std::string> scenarios;
  bool fault_flip_lex = false;
};

struct CheckResult {
  std::string scenario;
  std::string name;
  bool passed = true;
  std::string detail;  // minimal reproducer on failure
};

struct SelftestReport {
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool passed() const;
  /// Deterministic: timing is not included.
  std::string to_json() const;
};

std::vector<std::string> selftest_scenarios();
SelftestReport run_selftest(const SelftestOptions& opt);

}  // namespace kmchev
