// Acceptance suite: runs the twelve release criteria end to end and prints
// one pass/fail line per criterion. Exits with the number of failures.

#include <cstdio>
#include <string>
#include <vector>

#include "alab/verify.hpp"

int main() {
  const std::vector<std::pair<std::string, std::string>> criteria = {
      {"capacity", "capacity solver exactness"},
      {"constants", "constant identities"},
      {"lambda", "lambda maximization"},
      {"martingale", "one-step U/EJS identity"},
      {"drift", "drift bounds on simulated transitions"},
      {"floors", "per-class EJS floors"},
      {"sandwich", "bound sandwich around the simulated mean"},
      {"pe", "error-probability control"},
      {"ordering", "EJS vs MSGBS ordering"},
      {"oracle", "Monte Carlo vs exact enumeration"},
      {"combinatorics", "c* and noiseless search depths"},
      {"determinism", "thread-count determinism"},
  };

  alab::VerifyOptions options;
  for (const auto& [group, name] : criteria) options.only.push_back(group);
  const auto outcomes = alab::run_verification(options);

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool pass = false;
    std::string detail = "check did not run";
    double seconds = 0.0;
    for (const auto& o : outcomes) {
      if (o.group != criteria[i].first) continue;
      pass = o.pass;
      detail = o.detail;
      seconds = o.seconds;
    }
    if (!pass) ++failures;
    std::printf("%s criterion %2zu: %s :: %s (%.2f s)\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].second.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
  }
  if (failures) std::printf("%d of 12 criteria failed\n", failures);
  return failures;
}
