#include "alab/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "alab/csvio.hpp"
#include "alab/errors.hpp"

namespace alab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_common(int m, double eps) {
  if (m < 2) throw std::invalid_argument("bounds need m >= 2");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("bounds need eps in (0, 1)");
}

}  // namespace

double lower_bound_queries(int m, double eps, double c, double c1, double c2) {
  check_common(m, eps);
  if (!(c > 0.0) || !(c1 > 0.0))
    throw std::invalid_argument("lower_bound_queries needs c, c1 > 0");
  if (!(c2 >= 1.0) || std::isinf(c2))
    throw ValidationError(
        "lower_bound_queries needs the finite-likelihood-ratio assumption (C2 < infinity)");

  const double log_m = std::log2(static_cast<double>(m));
  const double log4e = std::log2(4.0 / eps);
  const double search =
      ((1.0 - 3.0 / log4e - 0.5 * eps * std::log2(1.0 / eps)) * log_m - 2.0) / c;
  const double confirm =
      (std::log2((1.0 - eps) / eps) - 2.0 * std::log2(log4e) - std::log2(c2) - 4.0) / c1;
  return std::max(search + confirm, 0.0);
}

UpperBounds upper_bound_queries(int m, double eps, double alpha, double beta, double c2) {
  check_common(m, eps);
  if (!(alpha > 0.0)) throw std::invalid_argument("upper_bound_queries needs alpha > 0");
  if (!(beta >= alpha)) throw std::invalid_argument("upper_bound_queries needs beta >= alpha");
  if (std::isinf(c2))
    throw ValidationError(
        "upper_bound_queries needs the finite-likelihood-ratio assumption (C2 < infinity)");

  const double log_m = std::log2(static_cast<double>(m));
  const double log_inv_eps = std::log2(1.0 / eps);
  UpperBounds out;
  out.single_phase =
      (log_m + std::max(std::log2(log_m), log_inv_eps) + 4.0 * c2) / alpha;
  // Taking the max before the outer log keeps the argument >= 1 even when
  // one branch alone would be degenerate (m = 2 or eps >= 1/2).
  const double inner = std::log2(std::max(log_m, log_inv_eps));
  out.two_phase = (log_m + inner) / alpha + log_inv_eps / beta +
                  3.0 * (4.0 * c2) * (4.0 * c2) / (alpha * beta);
  return out;
}

double rho_tilde(int m, double eps) {
  check_common(m, eps);
  const double scale = std::max(std::log2(static_cast<double>(m)), std::log2(1.0 / eps));
  return 1.0 - 1.0 / (1.0 + scale);
}

BscConstants bsc_constants(double p) {
  if (!(p > 0.0 && p < 0.5))
    throw std::invalid_argument("bsc_constants needs p in (0, 0.5)");
  BscConstants out;
  out.c = 1.0 + p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p);
  out.c1 = p * std::log2(p / (1.0 - p)) + (1.0 - p) * std::log2((1.0 - p) / p);
  out.c2 = (1.0 - p) / p;
  return out;
}

LambdaResult lambda_p(double p) {
  if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument("lambda_p needs p in (0, 0.5)");
  const auto objective = [p](double q) {
    return 0.25 * (1.0 - q * (1.0 - p) / (1.0 - q) - (1.0 - q) * p / q);
  };
  // Golden-section search; the objective is smooth and unimodal on (p, 1/2)
  // with value 0 at both ends.
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = p, hi = 0.5;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = objective(x1), f2 = objective(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = objective(x1);
    }
  }
  const double mid = 0.5 * (lo + hi);
  return {std::max(objective(mid), 0.0), mid};
}

double ngbs_bound(double n0_queries, double eps, double p) {
  if (!(n0_queries >= 1.0)) throw std::invalid_argument("ngbs_bound needs n0 >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("ngbs_bound needs eps in (0,1)");
  if (!(p < 0.5)) throw std::invalid_argument("ngbs_bound needs p < 0.5");
  const double gap = 0.5 - p;
  return n0_queries * (std::log2(n0_queries) + std::log2(1.0 / eps)) / (gap * gap);
}

double msgbs_bound(int m, double eps, double p, double c_star) {
  check_common(m, eps);
  if (!(c_star >= 0.0 && c_star < 1.0))
    throw std::invalid_argument("msgbs_bound diverges unless c* lies in [0, 1)");
  if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument("msgbs_bound needs p in (0, 0.5)");
  const double rate = std::min(2.0 * (1.0 - c_star), 1.0) * lambda_p(p).value;
  return (std::log2(static_cast<double>(m)) + std::log2(1.0 / eps)) / rate;
}

BoundReport class_bound_report(const std::string& class_tag, int m, double eps, double p) {
  check_common(m, eps);
  const BscConstants k = bsc_constants(p);
  BoundReport rep;
  rep.class_tag = class_tag;
  rep.m = m;
  rep.epsilon = eps;
  rep.p = p;
  rep.c = k.c;
  rep.c1 = k.c1;
  rep.c2 = k.c2;
  rep.rho_tilde = alab::rho_tilde(m, eps);

  double n0_analytic = 0.0;
  double c_star_analytic = 0.0;
  if (class_tag == "disjoint") {
    rep.alpha = k.c1 / m;
    rep.beta = rep.rho_tilde * k.c1;
    n0_analytic = static_cast<double>(m);
    c_star_analytic = 1.0 - 2.0 / m;
  } else if (class_tag == "threshold") {
    rep.alpha = k.c;
    rep.beta = k.c;
    n0_analytic = std::log2(static_cast<double>(m));
    c_star_analytic = 0.0;
  } else if (class_tag == "rich") {
    rep.alpha = k.c;
    rep.beta = rep.rho_tilde * k.c1;
    n0_analytic = std::log2(static_cast<double>(m));
    c_star_analytic = 0.0;
  } else {
    throw std::invalid_argument("unknown class tag: " + class_tag);
  }

  const double log_m = std::log2(static_cast<double>(m));
  const double log4e = std::log2(4.0 / eps);
  rep.lb_search_term =
      ((1.0 - 3.0 / log4e - 0.5 * eps * std::log2(1.0 / eps)) * log_m - 2.0) / k.c;
  rep.lb_confirm_term =
      (std::log2((1.0 - eps) / eps) - 2.0 * std::log2(log4e) - std::log2(k.c2) - 4.0) / k.c1;
  rep.lower_bound = lower_bound_queries(m, eps, k.c, k.c1, k.c2);
  const UpperBounds ub = upper_bound_queries(m, eps, rep.alpha, rep.beta, k.c2);
  rep.ub_single_alpha = ub.single_phase;
  rep.ub_two_phase = ub.two_phase;
  rep.ngbs = ngbs_bound(n0_analytic, eps, p);
  rep.msgbs = msgbs_bound(m, eps, p, c_star_analytic);
  return rep;
}

std::vector<ConstantsRow> constants_sweep(const std::vector<double>& p_grid) {
  std::vector<ConstantsRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    const BscConstants k = bsc_constants(p);
    ConstantsRow row;
    row.p = p;
    row.c = k.c;
    row.c1 = k.c1;
    row.half_minus_p_sq = (0.5 - p) * (0.5 - p);
    row.lambda = lambda_p(p).value;
    rows.push_back(row);
  }
  return rows;
}

const char kBoundCsvHeader[] =
    "class,M,epsilon,p,C,C1,C2,alpha,beta,rho_tilde,lower_bound,lb_search_term,"
    "lb_confirm_term,ub_single_alpha,ub_two_phase,ngbs,msgbs";

std::string format_bound_csv(const std::vector<BoundReport>& reports) {
  std::string out = kBoundCsvHeader;
  out += '\n';
  for (const BoundReport& r : reports) {
    out += csv_escape(r.class_tag) + ',' + std::to_string(r.m) + ',' + format_double(r.epsilon) + ',' +
           format_double(r.p) + ',' + format_double(r.c) + ',' + format_double(r.c1) + ',' +
           format_double(r.c2) + ',' + format_double(r.alpha) + ',' + format_double(r.beta) +
           ',' + format_double(r.rho_tilde) + ',' + format_double(r.lower_bound) + ',' +
           format_double(r.lb_search_term) + ',' + format_double(r.lb_confirm_term) + ',' +
           format_double(r.ub_single_alpha) + ',' + format_double(r.ub_two_phase) + ',' +
           format_double(r.ngbs) + ',' + format_double(r.msgbs) + '\n';
  }
  return out;
}

std::vector<BoundReport> parse_bound_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kBoundCsvHeader)
    throw ValidationError("bound csv must start with the standard header");
  std::vector<BoundReport> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 17) throw ValidationError("bound csv row has wrong field count");
    BoundReport r;
    r.class_tag = f[0];
    r.m = static_cast<int>(parse_long(f[1]));
    r.epsilon = parse_double(f[2]);
    r.p = parse_double(f[3]);
    r.c = parse_double(f[4]);
    r.c1 = parse_double(f[5]);
    r.c2 = parse_double(f[6]);
    r.alpha = parse_double(f[7]);
    r.beta = parse_double(f[8]);
    r.rho_tilde = parse_double(f[9]);
    r.lower_bound = parse_double(f[10]);
    r.lb_search_term = parse_double(f[11]);
    r.lb_confirm_term = parse_double(f[12]);
    r.ub_single_alpha = parse_double(f[13]);
    r.ub_two_phase = parse_double(f[14]);
    r.ngbs = parse_double(f[15]);
    r.msgbs = parse_double(f[16]);
    out.push_back(std::move(r));
  }
  return out;
}

const char kConstantsCsvHeader[] = "p,C,C1,half_minus_p_sq,lambda";

std::string format_constants_csv(const std::vector<ConstantsRow>& rows) {
  std::string out = kConstantsCsvHeader;
  out += '\n';
  for (const ConstantsRow& r : rows)
    out += format_double(r.p) + ',' + format_double(r.c) + ',' + format_double(r.c1) + ',' +
           format_double(r.half_minus_p_sq) + ',' + format_double(r.lambda) + '\n';
  return out;
}

std::vector<ConstantsRow> parse_constants_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kConstantsCsvHeader)
    throw ValidationError("constants csv must start with the standard header");
  std::vector<ConstantsRow> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 5) throw ValidationError("constants csv row has wrong field count");
    out.push_back({parse_double(f[0]), parse_double(f[1]), parse_double(f[2]),
                   parse_double(f[3]), parse_double(f[4])});
  }
  return out;
}

}  // namespace alab
