#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dyana {

enum class SuiteSize { Small, Medium };

struct Violation {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = 0.0;
};

struct SuiteReport {
  std::string name;
  int cases = 0;
  std::vector<Violation> violations;
  double wall_ms = 0.0;

  bool ok() const { return violations.empty(); }
};

/// Known suite names plus "all"; throws std::invalid_argument for others.
std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed,
                                    SuiteSize size);

std::vector<std::string> suite_names();  // without "all"

/// Timings are opt-in so the default output is byte-identical per seed.
std::string reports_to_csv(const std::vector<SuiteReport>& reports,
                           bool include_timings = false);
std::string reports_to_json(const std::vector<SuiteReport>& reports,
                            bool include_timings = false);

}  // namespace dyana
