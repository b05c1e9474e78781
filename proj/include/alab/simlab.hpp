#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "alab/belief.hpp"
#include "alab/channel.hpp"
#include "alab/hypotheses.hpp"
#include "alab/policies.hpp"

namespace alab {

// A fully resolved experiment. The tag/echo fields feed the CSV output;
// the objects drive the simulation.
struct ExperimentConfig {
  FunctionClass fc;
  Channel ch;
  PolicyKind policy;
  StoppingRule rule;
  long episodes = 1;
  std::uint64_t seed = 0;
  bool record_beliefs = false;
  int threads = 0;  // 0 = automatic; ALAB_THREADS caps either way

  std::string class_tag;
  std::string policy_tag;
  double bsc_p = std::numeric_limits<double>::quiet_NaN();

  void validate() const;
};

struct EpisodeTrace {
  int true_function = -1;
  std::vector<int> queries;
  std::vector<int> outcomes;
  std::vector<Belief> beliefs;  // one per time step incl. the prior, when recorded
  long stop_time = 0;
  int declaration = -1;
  bool correct = false;
};

// One simulated episode, fully determined by (cfg.seed, episode_index):
// the true function, every policy randomization, and every outcome come
// from the episode's own counter-based substream. Episodes longer than
// 10^7 steps abort with SimulationError.
EpisodeTrace run_episode(const ExperimentConfig& cfg, long episode_index);

struct ResultRow {
  std::string policy;
  std::string class_tag;
  int m = 0;
  double p = 0.0;  // BSC crossover, NaN for general channels
  double epsilon = 0.0;
  std::string mode;
  long horizon = 0;  // fixed-budget length; 0 in sequential mode
  long episodes = 0;
  std::uint64_t seed = 0;
  double mean_tau = 0.0;
  double se_tau = 0.0;
  double pe = 0.0;
  double se_pe = 0.0;
};

// Monte Carlo estimate over cfg.episodes independent episodes. Episodes
// run concurrently but are reduced in episode order, so the result is
// identical for any thread count.
ResultRow monte_carlo(const ExperimentConfig& cfg);

struct ExactResult {
  double mean_tau_truncated = 0.0;  // exact E[min(tau, horizon)]
  double pe = 0.0;                  // exact error probability at the horizon
  double unstopped_mass = 0.0;      // probability the rule has not fired by the horizon
};

// Exact expectation by enumerating every outcome sequence up to `horizon`
// with its probability under each candidate truth. Deterministic policies
// only (EJS); guarded by num_outcomes^horizon * M <= 10^7.
ExactResult exact_expectation(const ExperimentConfig& cfg, int horizon);

// Replays a recorded trace and reports every violated step invariant:
// simplex normalization plus the three per-step drift bounds (log-odds
// change <= log2 C2, |d rho| <= rho (1-rho)(C2 - 1), and the U-drift bound
// C2 (3 + delta log2(M-1)) once the posterior is past 1 - delta for
// delta <= 1/2). Returns human-readable violation lines, expected empty.
std::vector<std::string> invariant_monitor(const EpisodeTrace& trace,
                                           const FunctionClass& fc, const Channel& ch);

// Line-oriented trace dump: header then one "t,query,outcome,max_belief"
// line per step. Requires recorded beliefs.
std::string format_trace(const EpisodeTrace& trace);

// CSV with the exact column set for result rows.
extern const char kResultCsvHeader[];
std::string format_result_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_result_csv(const std::string& text);

// Worker count: `requested` (or hardware concurrency when 0), capped by
// the ALAB_THREADS environment variable when set.
int resolve_thread_count(int requested);

}  // namespace alab
