#pragma once

#include <string>
#include <vector>

namespace alab {

// Lower bound on the expected number of queries any strategy needs to
// reach error probability eps over m functions, in terms of the channel
// constants. The two bracket terms (search phase over the class, then the
// confirmation phase) can individually be negative; the bound clamps their
// sum at zero. Requires finite c2.
double lower_bound_queries(int m, double eps, double c, double c1, double c2);

struct UpperBounds {
  double single_phase = 0.0;  // one EJS floor alpha over all beliefs
  double two_phase = 0.0;     // alpha everywhere plus beta on confident beliefs
};

// Upper bounds on the expected query count of the EJS policy given
// per-step divergence floors alpha (all beliefs) and beta >= alpha
// (confident beliefs).
UpperBounds upper_bound_queries(int m, double eps, double alpha, double beta, double c2);

// Posterior threshold defining the confident-belief region:
//   1 - 1 / (1 + max{log2 m, log2(1/eps)}).
double rho_tilde(int m, double eps);

struct BscConstants {
  double c = 0.0;   // capacity 1 - H2(p)
  double c1 = 0.0;  // (1-2p) log2((1-p)/p)
  double c2 = 1.0;  // (1-p)/p
};

// Closed forms for the binary symmetric channel, p in (0, 0.5).
BscConstants bsc_constants(double p);

struct LambdaResult {
  double value = 0.0;
  double maximizer = 0.0;  // argmax p' in (p, 1/2)
};

// Per-query information rate of soft-decision binary search under assumed
// noise p' with true noise p, maximized over p' by golden-section search
// to 1e-10 in p'.
LambdaResult lambda_p(double p);

// Query count needed by noiseless-style GBS with repetition to reach error
// eps: n0 (log2 n0 + log2(1/eps)) / (1/2 - p)^2. n0 may be a fractional
// analytic value such as log2 M.
double ngbs_bound(double n0_queries, double eps, double p);

// Query count needed by MSGBS: (log2 m + log2(1/eps)) / (min{2(1-c*),1} lambda(p)).
double msgbs_bound(int m, double eps, double p, double c_star);

// Everything the bound calculators can say about one (class, m, eps, p)
// configuration on a binary symmetric channel.
struct BoundReport {
  std::string class_tag;
  int m = 0;
  double epsilon = 0.0;
  double p = 0.0;
  double c = 0.0;
  double c1 = 0.0;
  double c2 = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
  double rho_tilde = 0.0;
  double lower_bound = 0.0;
  double lb_search_term = 0.0;   // unclamped first bracket term
  double lb_confirm_term = 0.0;  // unclamped second bracket term
  double ub_single_alpha = 0.0;
  double ub_two_phase = 0.0;
  double ngbs = 0.0;
  double msgbs = 0.0;
};

// class_tag is one of disjoint/threshold/rich. The EJS floors are the
// certified per-class values (disjoint: alpha = C1/M, beta = rho~ C1;
// threshold: alpha = beta = C; rich: alpha = C, beta = rho~ C1), and the
// baseline bounds use the classes' analytic n0 and c*.
BoundReport class_bound_report(const std::string& class_tag, int m, double eps, double p);

struct ConstantsRow {
  double p = 0.0;
  double c = 0.0;
  double c1 = 0.0;
  double half_minus_p_sq = 0.0;
  double lambda = 0.0;
};

// One row per noise level, for plotting the constant comparison.
std::vector<ConstantsRow> constants_sweep(const std::vector<double>& p_grid);

extern const char kBoundCsvHeader[];
std::string format_bound_csv(const std::vector<BoundReport>& reports);
std::vector<BoundReport> parse_bound_csv(const std::string& text);

extern const char kConstantsCsvHeader[];
std::string format_constants_csv(const std::vector<ConstantsRow>& rows);
std::vector<ConstantsRow> parse_constants_csv(const std::string& text);

}  // namespace alab
