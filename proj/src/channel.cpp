#include "alab/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "alab/csvio.hpp"
#include "alab/errors.hpp"

namespace alab {

namespace {

constexpr double kRowSumTol = 1e-12;
constexpr double kZeroClip = 1e-15;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

bool Channel::strictly_positive() const {
  return std::all_of(likelihood.begin(), likelihood.end(), [](double v) { return v > 0.0; });
}

Channel make_channel(int num_labels, int num_outcomes, std::vector<double> likelihood) {
  if (num_labels < 2) throw ValidationError("channel needs at least 2 labels");
  if (num_outcomes < 2) throw ValidationError("channel needs at least 2 outcomes");
  if (likelihood.size() != static_cast<std::size_t>(num_labels) * num_outcomes)
    throw ValidationError("channel likelihood matrix has the wrong shape");

  for (double& v : likelihood) {
    if (std::abs(v) <= kZeroClip) v = 0.0;
    if (!(v >= 0.0) || v > 1.0 + kRowSumTol)
      throw ValidationError("channel entries must be probabilities in [0,1]");
  }
  for (int l = 0; l < num_labels; ++l) {
    double sum = 0.0;
    for (int y = 0; y < num_outcomes; ++y)
      sum += likelihood[static_cast<std::size_t>(l) * num_outcomes + y];
    if (std::abs(sum - 1.0) > kRowSumTol)
      throw ValidationError("channel row " + std::to_string(l) +
                            " sums to " + format_double(sum) + ", expected 1");
  }
  return Channel{num_labels, num_outcomes, std::move(likelihood)};
}

Channel make_channel(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ValidationError("channel needs at least 2 labels");
  const int n = static_cast<int>(rows.front().size());
  std::vector<double> flat;
  flat.reserve(rows.size() * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw ValidationError("channel rows have inconsistent lengths");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return make_channel(static_cast<int>(rows.size()), n, std::move(flat));
}

Channel bsc(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ValidationError("bsc crossover probability must lie in [0,1]");
  return make_channel(2, 2, {1.0 - p, p, p, 1.0 - p});
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size())
    throw std::invalid_argument("kl_divergence: distributions of different lengths");
  double sum = 0.0;
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (p[y] <= 0.0) continue;
    if (q[y] <= 0.0) return kInf;
    sum += p[y] * std::log2(p[y] / q[y]);
  }
  return std::max(sum, 0.0);
}

namespace {

struct BaSweepResult {
  double lower = 0.0;   // weighted estimate, a lower bound on capacity
  double upper = 0.0;   // max divergence over the support, an upper bound
  bool converged = false;
  std::vector<double> divergence;
  std::vector<double> mixture;
};

// Alternating-maximization sweeps over the positive-weight support of
// `input`, stopping once successive estimates differ by less than `tol`
// and the lower/upper certificate gap is below `tol`.
BaSweepResult run_alternating_maximization(const Channel& ch, std::vector<double>& input,
                                           int max_iter, double tol, int& budget) {
  const int k = ch.num_labels;
  const int n = ch.num_outcomes;
  BaSweepResult res;
  res.divergence.assign(k, 0.0);
  res.mixture.assign(n, 0.0);
  double previous = -kInf;
  for (int iter = 0; iter < max_iter && budget > 0; ++iter, --budget) {
    std::fill(res.mixture.begin(), res.mixture.end(), 0.0);
    for (int l = 0; l < k; ++l) {
      if (input[l] <= 0.0) continue;
      for (int y = 0; y < n; ++y) res.mixture[y] += input[l] * ch.at(l, y);
    }
    double upper = 0.0;
    double weighted = 0.0;  // sum_l pi_l 2^{D(f_l||g)}
    for (int l = 0; l < k; ++l) {
      if (input[l] <= 0.0) continue;
      res.divergence[l] = kl_divergence(ch.row(l), res.mixture);
      upper = std::max(upper, res.divergence[l]);
      weighted += input[l] * std::exp2(res.divergence[l]);
    }
    res.lower = std::max(std::log2(weighted), 0.0);
    res.upper = upper;
    if (std::abs(res.lower - previous) < tol && upper - res.lower < tol) {
      res.converged = true;
      return res;
    }
    previous = res.lower;
    for (int l = 0; l < k; ++l)
      if (input[l] > 0.0) input[l] *= std::exp2(res.divergence[l]) / weighted;
  }
  return res;
}

}  // namespace

CapacityResult shannon_capacity(const Channel& ch) {
  const int k = ch.num_labels;
  std::vector<double> input(k, 1.0 / k);
  // Channels whose optimal input barely uses some label need tens of
  // thousands of sweeps to place that weight to full precision; a sweep is
  // a few dozen flops, so the cap is generous rather than tight.
  int budget = 200000;

  while (budget > 0) {
    // A chunk of plain sweeps. Generic channels converge here directly.
    const BaSweepResult full = run_alternating_maximization(ch, input, 500, 1e-10, budget);

    std::vector<std::pair<double, int>> ranked;  // (divergence, label), descending
    for (int l = 0; l < k; ++l)
      if (input[l] > 0.0) ranked.emplace_back(full.divergence[l], l);
    std::sort(ranked.rbegin(), ranked.rend());
    const double spread = ranked.front().first - ranked.back().first;
    // Half the 1e-8 optimality tolerance: active rows equalize to well
    // within this, while genuinely dominated rows sit orders of magnitude
    // lower.
    const double slack = std::max(2.0 * (full.upper - full.lower), 5e-9);
    if (full.converged && spread <= slack) return {full.lower, std::move(input)};

    // Rows lagging under the top cluster are (almost surely) outside the
    // optimal support, and their weight only decays like 2^{-lag} per
    // sweep, which can dwarf the iteration budget. Guess the active set by
    // splitting at the largest jump in the sorted divergences, solve the
    // restricted problem, and certify: its mixture is feasible for the
    // full problem, so if no left-out row beats the restricted upper
    // bound, the capacity is pinned.
    std::size_t split = 0;
    for (std::size_t i = 1; i < ranked.size(); ++i)
      if (split == 0 || ranked[i - 1].first - ranked[i].first >
                            ranked[split - 1].first - ranked[split].first)
        split = i;
    if (split == 0 || ranked[split - 1].first - ranked[split].first <= slack) continue;

    std::vector<double> sub(k, 0.0);
    for (std::size_t i = 0; i < split; ++i) sub[ranked[i].second] = 1.0 / split;
    const BaSweepResult cert = run_alternating_maximization(ch, sub, 2000, 1e-11, budget);
    if (!cert.converged) continue;
    bool covered = true;
    for (int l = 0; l < k && covered; ++l)
      if (sub[l] <= 0.0) covered = kl_divergence(ch.row(l), cert.mixture) <= cert.upper;
    if (covered) return {cert.lower, std::move(sub)};
  }
  throw ConvergenceError("capacity iteration exhausted its sweep budget");
}

double c1(const Channel& ch) {
  double best = 0.0;
  for (int k = 0; k < ch.num_labels; ++k)
    for (int l = 0; l < ch.num_labels; ++l) {
      if (k == l) continue;
      best = std::max(best, kl_divergence(ch.row(k), ch.row(l)));
      if (best == kInf) return best;
    }
  return best;
}

double c2(const Channel& ch) {
  double best = 1.0;
  for (int k = 0; k < ch.num_labels; ++k)
    for (int l = 0; l < ch.num_labels; ++l) {
      if (k == l) continue;
      for (int y = 0; y < ch.num_outcomes; ++y) {
        const double num = ch.at(k, y);
        const double den = ch.at(l, y);
        if (num <= 0.0) continue;
        if (den <= 0.0) return kInf;
        best = std::max(best, num / den);
      }
    }
  return best;
}

double pairwise_capacity(const Channel& ch, int l, int l2) {
  if (l == l2) throw std::invalid_argument("pairwise_capacity needs two distinct labels");
  if (l < 0 || l >= ch.num_labels || l2 < 0 || l2 >= ch.num_labels)
    throw std::invalid_argument("pairwise_capacity: label out of range");
  std::vector<double> sub;
  sub.reserve(2 * ch.num_outcomes);
  sub.insert(sub.end(), ch.row(l).begin(), ch.row(l).end());
  sub.insert(sub.end(), ch.row(l2).begin(), ch.row(l2).end());
  Channel pair{2, ch.num_outcomes, std::move(sub)};
  return shannon_capacity(pair).bits;
}

double c_min(const Channel& ch) {
  const int k = ch.num_labels;
  std::vector<double> half(ch.num_outcomes);
  double best = kInf;
  for (int l = 0; l < k; ++l)
    for (int l2 = 0; l2 < k; ++l2) {
      if (l == l2) continue;
      const double cap = pairwise_capacity(ch, l, l2);
      for (int y = 0; y < ch.num_outcomes; ++y)
        half[y] = 0.5 * (ch.at(l, y) + ch.at(l2, y));
      const double mid = kl_divergence(ch.row(l2), half);
      best = std::min(best, std::min(cap, mid));
    }
  return best;
}

ChannelConstants compute_constants(const Channel& ch) {
  ChannelConstants out;
  auto cap = shannon_capacity(ch);
  out.capacity = cap.bits;
  out.capacity_input = std::move(cap.input);
  out.c1 = c1(ch);
  out.c2 = c2(ch);
  out.num_labels = ch.num_labels;
  out.pairwise.assign(static_cast<std::size_t>(ch.num_labels) * ch.num_labels, 0.0);
  for (int l = 0; l < ch.num_labels; ++l)
    for (int l2 = l + 1; l2 < ch.num_labels; ++l2) {
      const double v = pairwise_capacity(ch, l, l2);
      out.pairwise[static_cast<std::size_t>(l) * ch.num_labels + l2] = v;
      out.pairwise[static_cast<std::size_t>(l2) * ch.num_labels + l] = v;
    }
  out.c_min = c_min(ch);
  return out;
}

AssumptionReport check_assumptions(const Channel& ch) {
  AssumptionReport rep;
  // C > 0 exactly when at least two rows differ.
  for (int a = 0; a < ch.num_labels && !rep.positive_capacity; ++a)
    for (int b = a + 1; b < ch.num_labels && !rep.positive_capacity; ++b)
      for (int y = 0; y < ch.num_outcomes; ++y)
        if (ch.at(a, y) != ch.at(b, y)) {
          rep.positive_capacity = true;
          break;
        }
  rep.finite_c2 = ch.strictly_positive() || c2(ch) < kInf;
  rep.finite_c1 = rep.finite_c2 || c1(ch) < kInf;
  return rep;
}

std::string AssumptionReport::violation_message() const {
  if (all_hold()) return {};
  std::string msg = "channel violates";
  if (!positive_capacity) msg += " the positive-capacity assumption (C > 0);";
  if (!finite_c1) msg += " the finite-divergence assumption (C1 < infinity);";
  if (!finite_c2) msg += " the finite-likelihood-ratio assumption (C2 < infinity);";
  msg.pop_back();
  return msg;
}

std::string format_channel(const Channel& ch) {
  std::string out = "labels " + std::to_string(ch.num_labels) + " outcomes " +
                    std::to_string(ch.num_outcomes) + "\n";
  for (int l = 0; l < ch.num_labels; ++l) {
    for (int y = 0; y < ch.num_outcomes; ++y) {
      if (y) out += ' ';
      out += format_double(ch.at(l, y));
    }
    out += '\n';
  }
  return out;
}

Channel parse_channel(std::istream& in) {
  std::string kw_labels, kw_outcomes;
  int k = 0, n = 0;
  if (!(in >> kw_labels >> k >> kw_outcomes >> n) || kw_labels != "labels" ||
      kw_outcomes != "outcomes")
    throw ValidationError("channel file must start with \"labels K outcomes N\"");
  if (k < 2 || n < 2) throw ValidationError("channel file declares fewer than 2 labels/outcomes");
  std::vector<double> flat(static_cast<std::size_t>(k) * n);
  for (double& v : flat)
    if (!(in >> v)) throw ValidationError("channel file is missing probability entries");
  return make_channel(k, n, std::move(flat));
}

Channel parse_channel_text(const std::string& text) {
  std::istringstream in(text);
  return parse_channel(in);
}

ChannelSpec parse_channel_spec(const std::string& spec) {
  ChannelSpec out;
  out.tag = spec;
  if (spec.rfind("bsc:", 0) == 0) {
    const std::string body = spec.substr(4);
    if (body.rfind("p=", 0) != 0)
      throw ValidationError("bsc shorthand must look like bsc:p=0.2");
    const double p = parse_double(body.substr(2));
    out.channel = bsc(p);
    out.bsc_p = p;
    return out;
  }
  std::ifstream file(spec);
  if (!file) throw ValidationError("cannot open channel file: " + spec);
  out.channel = parse_channel(file);
  // Recognize a BSC given as a file so downstream defaults still work.
  const Channel& ch = out.channel;
  if (ch.num_labels == 2 && ch.num_outcomes == 2 && ch.at(0, 0) == ch.at(1, 1) &&
      ch.at(0, 1) == ch.at(1, 0))
    out.bsc_p = ch.at(0, 1);
  return out;
}

}  // namespace alab
