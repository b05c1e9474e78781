#pragma once

#include <string>
#include <vector>

namespace alab {

struct CheckOutcome {
  std::string group;  // stable name usable with --only
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::vector<std::string> only;  // empty = run everything
  int threads = 0;
};

// Check groups in reporting order: the twelve acceptance criteria
// (capacity, constants, lambda, martingale, drift, floors, sandwich,
// pe, ordering, oracle, combinatorics, determinism) followed by the
// cross-module property suite ("properties").
const std::vector<std::string>& verification_groups();

// Runs the selected groups at desk scale and reports one outcome per
// check. Heavy Monte Carlo inputs are shared between checks within a run.
std::vector<CheckOutcome> run_verification(const VerifyOptions& options);

}  // namespace alab
