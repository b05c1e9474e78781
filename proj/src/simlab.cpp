#include "alab/simlab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "alab/csvio.hpp"
#include "alab/errors.hpp"
#include "alab/rng.hpp"

namespace alab {

namespace {

constexpr long kStepCap = 10'000'000;

bool is_msgbs(const ExperimentConfig& cfg) { return cfg.policy.tag == PolicyTag::Msgbs; }

}  // namespace

void ExperimentConfig::validate() const {
  if (episodes < 1) throw ValidationError("experiment needs at least one episode");
  if (fc.num_labels != ch.num_labels)
    throw ValidationError("class labels do not match channel labels");
  policy.validate();
  if (policy.tag == PolicyTag::Msgbs) {
    if (!fc.binary() || ch.num_outcomes != 2)
      throw ValidationError("msgbs needs a binary class and binary outcomes");
    if (!policy.msgbs_c_star)
      throw ValidationError("msgbs config is missing the precomputed c*");
  }
}

EpisodeTrace run_episode(const ExperimentConfig& cfg, long episode_index) {
  EpisodeRng rng(cfg.seed, static_cast<std::uint64_t>(episode_index));
  EpisodeTrace trace;
  trace.true_function = rng.uniform_index(cfg.fc.num_functions);

  Belief state = uniform_belief(cfg.fc.num_functions);
  if (cfg.record_beliefs) trace.beliefs.push_back(state);

  long t = 0;
  while (!should_stop(cfg.rule, state, t)) {
    if (t >= kStepCap)
      throw SimulationError(
          "episode exceeded 10^7 steps; epsilon is unreachable on this channel");
    int x;
    if (state.max() >= 1.0) {
      // Degenerate posterior absorbs: every query is a no-op, so any
      // column serves. Only reachable in fixed-budget mode.
      x = 0;
    } else {
      x = select_query(cfg.policy, state, cfg.fc, cfg.ch, rng);
    }
    const int true_label = cfg.fc.label(trace.true_function, x);
    const int y = rng.sample_pmf(cfg.ch.row(true_label));
    state = is_msgbs(cfg) ? msgbs_weight_update(state, cfg.fc, x, y, *cfg.policy.msgbs_q)
                          : bayes_update(state, cfg.fc, cfg.ch, x, y);
    trace.queries.push_back(x);
    trace.outcomes.push_back(y);
    if (cfg.record_beliefs) trace.beliefs.push_back(state);
    ++t;
  }
  trace.stop_time = t;
  trace.declaration = declare(state);
  trace.correct = trace.declaration == trace.true_function;
  return trace;
}

int resolve_thread_count(int requested) {
  int threads = requested > 0 ? requested
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* cap_env = std::getenv("ALAB_THREADS")) {
    const int cap = std::atoi(cap_env);
    if (cap > 0) threads = std::min(threads, cap);
  }
  return threads;
}

ResultRow monte_carlo(const ExperimentConfig& cfg) {
  cfg.validate();
  const long n = cfg.episodes;
  std::vector<long> taus(n);
  std::vector<unsigned char> wrong(n);

  const int threads = std::min<long>(resolve_thread_count(cfg.threads), n);
  std::vector<std::exception_ptr> failures(threads);
  auto worker = [&](int worker_index) {
    try {
      for (long e = worker_index; e < n; e += threads) {
        const EpisodeTrace trace = run_episode(cfg, e);
        taus[e] = trace.stop_time;
        wrong[e] = trace.correct ? 0 : 1;
      }
    } catch (...) {
      failures[worker_index] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  for (auto& failure : failures)
    if (failure) std::rethrow_exception(failure);

  // Reduce in episode order: the result is independent of the schedule.
  double sum = 0.0, sum_sq = 0.0;
  long wrong_count = 0;
  for (long e = 0; e < n; ++e) {
    sum += static_cast<double>(taus[e]);
    sum_sq += static_cast<double>(taus[e]) * static_cast<double>(taus[e]);
    wrong_count += wrong[e];
  }

  ResultRow row;
  row.policy = cfg.policy_tag;
  row.class_tag = cfg.class_tag;
  row.m = cfg.fc.num_functions;
  row.p = cfg.bsc_p;
  row.epsilon = cfg.rule.mode == StoppingRule::Mode::Sequential ? cfg.rule.epsilon : 0.0;
  row.mode = cfg.rule.mode == StoppingRule::Mode::Sequential ? "sequential" : "fixed";
  row.horizon = cfg.rule.mode == StoppingRule::Mode::FixedBudget ? cfg.rule.budget : 0;
  row.episodes = n;
  row.seed = cfg.seed;
  row.mean_tau = sum / static_cast<double>(n);
  if (n > 1) {
    const double var =
        std::max(sum_sq - sum * sum / static_cast<double>(n), 0.0) / static_cast<double>(n - 1);
    row.se_tau = std::sqrt(var / static_cast<double>(n));
  }
  row.pe = static_cast<double>(wrong_count) / static_cast<double>(n);
  row.se_pe = std::sqrt(row.pe * (1.0 - row.pe) / static_cast<double>(n));
  return row;
}

namespace {

struct ExactAccumulator {
  double mean = 0.0;
  double error = 0.0;
  double unstopped = 0.0;
};

// Depth-first walk over outcome prefixes. `joint` carries the joint mass
// P(theta = i, observed prefix) with the uniform prior folded in, so the
// node's posterior is just its normalization and the node's total mass its
// sum.
void exact_walk(const ExperimentConfig& cfg, int horizon, std::vector<double>& joint,
                long t, ExactAccumulator& acc) {
  double mass = 0.0;
  for (double v : joint) mass += v;
  if (mass <= 0.0) return;

  Belief posterior;
  posterior.probs.resize(joint.size());
  for (std::size_t i = 0; i < joint.size(); ++i) posterior.probs[i] = joint[i] / mass;

  const auto settle = [&](bool stopped) {
    acc.mean += mass * static_cast<double>(stopped ? t : horizon);
    const int decl = declare(posterior);
    acc.error += mass - joint[decl];
    if (!stopped) acc.unstopped += mass;
  };
  if (should_stop(cfg.rule, posterior, t)) {
    settle(true);
    return;
  }
  if (t >= horizon) {
    settle(false);
    return;
  }

  const int x = posterior.max() >= 1.0
                    ? 0
                    : ejs_argmax(posterior, cfg.fc, cfg.ch).column;
  std::vector<double> child(joint.size());
  for (int y = 0; y < cfg.ch.num_outcomes; ++y) {
    for (std::size_t i = 0; i < joint.size(); ++i)
      child[i] = joint[i] * cfg.ch.at(cfg.fc.label(static_cast<int>(i), x), y);
    exact_walk(cfg, horizon, child, t + 1, acc);
  }
}

}  // namespace

ExactResult exact_expectation(const ExperimentConfig& cfg, int horizon) {
  cfg.validate();
  if (horizon < 0) throw std::invalid_argument("exact_expectation needs horizon >= 0");
  if (cfg.policy.tag != PolicyTag::Ejs)
    throw std::invalid_argument(
        "exact_expectation supports the deterministic ejs policy only");
  double nodes = cfg.fc.num_functions;
  for (int i = 0; i < horizon; ++i) {
    nodes *= cfg.ch.num_outcomes;
    if (nodes > 1e7)
      throw SizeError("exact_expectation: num_outcomes^horizon * M exceeds 10^7");
  }

  std::vector<double> joint(cfg.fc.num_functions,
                            1.0 / static_cast<double>(cfg.fc.num_functions));
  ExactAccumulator acc;
  exact_walk(cfg, horizon, joint, 0, acc);
  return {acc.mean, acc.error, acc.unstopped};
}

std::vector<std::string> invariant_monitor(const EpisodeTrace& trace,
                                           const FunctionClass& fc, const Channel& ch) {
  if (trace.beliefs.size() != static_cast<std::size_t>(trace.stop_time) + 1)
    throw std::invalid_argument("invariant_monitor needs a trace with recorded beliefs");
  std::vector<std::string> violations;
  const double ratio_bound = c2(ch);
  const bool finite = std::isfinite(ratio_bound);
  const double log_ratio = finite ? std::log2(ratio_bound) : 0.0;
  const int m = fc.num_functions;
  constexpr double kSlack = 1e-9;

  for (long t = 0; t < trace.stop_time; ++t) {
    const Belief& before = trace.beliefs[t];
    const Belief& after = trace.beliefs[t + 1];
    double sum = 0.0;
    for (double v : after.probs) {
      sum += v;
      if (v < 0.0)
        violations.push_back("step " + std::to_string(t) + ": negative posterior entry");
    }
    if (std::abs(sum - 1.0) > 1e-12)
      violations.push_back("step " + std::to_string(t) + ": posterior sums to " +
                           format_double(sum));
    if (!finite) continue;  // the drift bounds are vacuous when C2 = inf

    for (int i = 0; i < m; ++i) {
      const double a = before.probs[i];
      const double b = after.probs[i];
      if (a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0) {
        const double drift =
            std::abs(std::log2(b / (1.0 - b)) - std::log2(a / (1.0 - a)));
        if (drift > log_ratio + kSlack)
          violations.push_back("step " + std::to_string(t) + ": log-odds drift " +
                               format_double(drift) + " exceeds log2(C2) for function " +
                               std::to_string(i));
      }
      if (std::abs(b - a) > a * (1.0 - a) * (ratio_bound - 1.0) + kSlack)
        violations.push_back("step " + std::to_string(t) + ": posterior moved by " +
                             format_double(std::abs(b - a)) +
                             ", past the rho(1-rho)(C2-1) bound for function " +
                             std::to_string(i));
    }

    const double delta = 1.0 - after.max();
    if (delta > 0.0 && delta <= 0.5) {
      const double du = std::abs(u_of(after) - u_of(before));
      const double bound =
          ratio_bound * (3.0 + delta * (m > 2 ? std::log2(m - 1.0) : 0.0));
      if (du > bound + kSlack)
        violations.push_back("step " + std::to_string(t) + ": |dU| " + format_double(du) +
                             " exceeds the confident-phase bound " + format_double(bound));
    }
  }
  return violations;
}

std::string format_trace(const EpisodeTrace& trace) {
  if (trace.beliefs.size() != static_cast<std::size_t>(trace.stop_time) + 1)
    throw std::invalid_argument("format_trace needs a trace with recorded beliefs");
  std::string out = "t,query,outcome,max_belief\n";
  for (long t = 0; t < trace.stop_time; ++t) {
    out += std::to_string(t) + ',' + std::to_string(trace.queries[t]) + ',' +
           std::to_string(trace.outcomes[t]) + ',' +
           format_double(trace.beliefs[t + 1].max()) + '\n';
  }
  return out;
}

const char kResultCsvHeader[] =
    "policy,class,M,p,epsilon,mode,horizon,episodes,seed,mean_tau,se_tau,pe,se_pe";

std::string format_result_csv(const std::vector<ResultRow>& rows) {
  std::string out = kResultCsvHeader;
  out += '\n';
  for (const ResultRow& r : rows) {
    out += csv_escape(r.policy) + ',' + csv_escape(r.class_tag) + ',' + std::to_string(r.m) + ',' +
           format_double(r.p) + ',' + format_double(r.epsilon) + ',' + r.mode + ',' +
           std::to_string(r.horizon) + ',' + std::to_string(r.episodes) + ',' +
           std::to_string(r.seed) + ',' + format_double(r.mean_tau) + ',' +
           format_double(r.se_tau) + ',' + format_double(r.pe) + ',' +
           format_double(r.se_pe) + '\n';
  }
  return out;
}

std::vector<ResultRow> parse_result_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kResultCsvHeader)
    throw ValidationError("result csv must start with the standard header");
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 13) throw ValidationError("result csv row has wrong field count");
    ResultRow r;
    r.policy = f[0];
    r.class_tag = f[1];
    r.m = static_cast<int>(parse_long(f[2]));
    r.p = parse_double(f[3]);
    r.epsilon = parse_double(f[4]);
    r.mode = f[5];
    r.horizon = parse_long(f[6]);
    r.episodes = parse_long(f[7]);
    r.seed = parse_u64(f[8]);
    r.mean_tau = parse_double(f[9]);
    r.se_tau = parse_double(f[10]);
    r.pe = parse_double(f[11]);
    r.se_pe = parse_double(f[12]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace alab
