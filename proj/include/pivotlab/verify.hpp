#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pivotlab {

struct CheckResult {
  std::string name;
  bool ok = false;
  double measured = 0.0;  // worst observed value (0/1 for exact checks)
  double bound = 0.0;     // limit the measurement is held to
  std::string detail;
};

struct VerifyOptions {
  int k_max = 6;
  long n_max = 100;
  bool identities_only = false;
  std::uint64_t seed = 424242;
  // Flips a sign inside one check so the harness can prove it reports
  // failures; never set outside tests.
  bool inject_fault = false;
};

// Runs the cross-module invariant suites (exact identities, root residuals,
// Vandermonde LU residuals, oracle-vs-series agreement, convergence, sorter
// spot checks, Monte Carlo consistency).
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace pivotlab
