#include "alab/simplex.hpp"

#include <cmath>
#include <limits>

#include "alab/errors.hpp"

namespace alab {

namespace {

constexpr double kPivotTol = 1e-11;

// Tableau with one artificial variable per row; the artificial block also
// serves as the initial basis for both phases.
struct Tableau {
  int rows;
  int real_cols;   // structural variables
  int total_cols;  // structural + artificial
  std::vector<std::vector<double>> t;  // rows x (total_cols + 1), last col = rhs
  std::vector<int> basis;

  double& at(int r, int c) { return t[r][c]; }
  double rhs(int r) const { return t[r][total_cols]; }

  void pivot(int r, int c) {
    const double piv = t[r][c];
    for (double& v : t[r]) v /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const double factor = t[i][c];
      if (factor == 0.0) continue;
      for (int j = 0; j <= total_cols; ++j) t[i][j] -= factor * t[r][j];
    }
    basis[r] = c;
  }

  // One simplex phase on the given cost vector. Bland's rule: the entering
  // column is the lowest index with negative reduced cost, the leaving row
  // the lowest-index basis variable among the minimum-ratio ties.
  void run(const std::vector<double>& cost, bool allow_artificial_entering) {
    constexpr int kMaxPivots = 200000;
    for (int step = 0; step < kMaxPivots; ++step) {
      std::vector<double> dual(rows);
      for (int r = 0; r < rows; ++r) dual[r] = cost[basis[r]];
      int entering = -1;
      for (int c = 0; c < total_cols; ++c) {
        if (!allow_artificial_entering && c >= real_cols) continue;
        double rc = cost[c];
        for (int r = 0; r < rows; ++r) rc -= dual[r] * t[r][c];
        if (rc < -kPivotTol) {
          entering = c;
          break;
        }
      }
      if (entering < 0) return;  // optimal for this phase
      int leaving = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < rows; ++r) {
        const double coeff = t[r][entering];
        if (coeff <= kPivotTol) continue;
        const double ratio = rhs(r) / coeff;
        if (ratio < best_ratio - kPivotTol ||
            (ratio < best_ratio + kPivotTol &&
             (leaving < 0 || basis[r] < basis[leaving]))) {
          best_ratio = ratio;
          leaving = r;
        }
      }
      if (leaving < 0) throw ConvergenceError("simplex: unbounded program");
      pivot(leaving, entering);
    }
    throw ConvergenceError("simplex: pivot cap exceeded");
  }
};

}  // namespace

LpResult solve_lp_min(const std::vector<std::vector<double>>& a,
                      const std::vector<double>& b, const std::vector<double>& c) {
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(c.size());
  if (rows == 0 || static_cast<int>(b.size()) != rows)
    throw std::invalid_argument("solve_lp_min: inconsistent shapes");

  Tableau tab;
  tab.rows = rows;
  tab.real_cols = cols;
  tab.total_cols = cols + rows;
  tab.t.assign(rows, std::vector<double>(tab.total_cols + 1, 0.0));
  tab.basis.resize(rows);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(a[r].size()) != cols)
      throw std::invalid_argument("solve_lp_min: inconsistent row length");
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;  // keep rhs nonnegative
    for (int j = 0; j < cols; ++j) tab.t[r][j] = sign * a[r][j];
    tab.t[r][cols + r] = 1.0;
    tab.t[r][tab.total_cols] = sign * b[r];
    tab.basis[r] = cols + r;
  }

  // Phase 1: minimize the artificial mass.
  std::vector<double> phase1(tab.total_cols, 0.0);
  for (int r = 0; r < rows; ++r) phase1[cols + r] = 1.0;
  tab.run(phase1, true);
  double infeasibility = 0.0;
  for (int r = 0; r < rows; ++r)
    if (tab.basis[r] >= cols) infeasibility += tab.rhs(r);
  if (infeasibility > 1e-8) throw ValidationError("solve_lp_min: infeasible program");

  // Phase 2 on the real objective; artificials may stay basic at zero but
  // never re-enter.
  std::vector<double> phase2(tab.total_cols, 0.0);
  for (int j = 0; j < cols; ++j) phase2[j] = c[j];
  tab.run(phase2, false);

  LpResult out;
  out.x.assign(cols, 0.0);
  for (int r = 0; r < rows; ++r)
    if (tab.basis[r] < cols) out.x[tab.basis[r]] = tab.rhs(r);
  out.objective = 0.0;
  for (int j = 0; j < cols; ++j) out.objective += c[j] * out.x[j];
  return out;
}

}  // namespace alab
