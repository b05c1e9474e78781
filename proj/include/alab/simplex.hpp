#pragma once

#include <vector>

namespace alab {

struct LpResult {
  double objective = 0.0;
  std::vector<double> x;
};

// Dense two-phase primal simplex for tiny equality-form programs:
//
//   minimize c.x  subject to  A x = b, x >= 0.
//
// Pivot selection uses Bland's rule, which cannot cycle, so the iteration
// cap is only a backstop. Throws ValidationError when infeasible and
// ConvergenceError when unbounded or capped.
LpResult solve_lp_min(const std::vector<std::vector<double>>& a,
                      const std::vector<double>& b, const std::vector<double>& c);

}  // namespace alab
