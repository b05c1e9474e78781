#include <cmath>
#include <cstdlib>

#include "alab/errors.hpp"
#include "alab/simlab.hpp"
#include "doctest.h"

using namespace alab;

namespace {

ExperimentConfig basic_config() {
  ExperimentConfig cfg;
  cfg.fc = make_disjoint(2);
  cfg.ch = bsc(0.2);
  cfg.policy = {PolicyTag::Ejs, std::nullopt, std::nullopt};
  cfg.rule = StoppingRule::sequential(0.1);
  cfg.episodes = 1000;
  cfg.seed = 7;
  cfg.class_tag = "disjoint:m=2";
  cfg.policy_tag = "ejs";
  cfg.bsc_p = 0.2;
  return cfg;
}

}  // namespace

TEST_CASE("episodes are reproducible from (seed, index)") {
  const ExperimentConfig cfg = basic_config();
  const EpisodeTrace a = run_episode(cfg, 3);
  const EpisodeTrace b = run_episode(cfg, 3);
  CHECK(a.true_function == b.true_function);
  CHECK(a.queries == b.queries);
  CHECK(a.outcomes == b.outcomes);
  CHECK(a.stop_time == b.stop_time);
  CHECK(a.declaration == b.declaration);
  CHECK(static_cast<long>(a.queries.size()) == a.stop_time);
}

TEST_CASE("a lax threshold stops before the first query") {
  ExperimentConfig cfg = basic_config();
  cfg.rule = StoppingRule::sequential(0.5);
  const EpisodeTrace trace = run_episode(cfg, 0);
  CHECK(trace.stop_time == 0);
  CHECK(trace.declaration == 0);

  const ResultRow row = monte_carlo(cfg);
  CHECK(row.mean_tau == 0.0);
  CHECK(std::abs(row.pe - 0.5) <= 3.0 * row.se_pe);
}

TEST_CASE("near-noiseless episodes eliminate one function per query") {
  // At vanishing noise the divergence-greedy policy prefers the column
  // isolating a single function (its confirmation value ~ log2(1/p) bits
  // dwarfs any balanced split), so it sweeps the class: stop time is the
  // position of the true function in the sweep, at most M-1.
  ExperimentConfig cfg;
  cfg.fc = make_threshold(8);
  cfg.ch = bsc(1e-9);
  cfg.policy = {PolicyTag::Ejs, std::nullopt, std::nullopt};
  cfg.rule = StoppingRule::sequential(0.01);
  cfg.episodes = 100;
  cfg.seed = 11;
  cfg.class_tag = "threshold:m=8";
  cfg.policy_tag = "ejs";
  cfg.bsc_p = 1e-9;
  for (long e = 0; e < 100; ++e) {
    const EpisodeTrace trace = run_episode(cfg, e);
    CHECK(trace.stop_time >= 1);
    CHECK(trace.stop_time <= 7);
    CHECK(trace.correct);
    if (trace.true_function == 0) CHECK(trace.stop_time == 1);
  }

  // The enumeration oracle sees the same sweep: stop times 1..7 with the
  // last two functions sharing 7, so the mean is 35/8.
  cfg.episodes = 1;
  CHECK(exact_expectation(cfg, 8).mean_tau_truncated ==
        doctest::Approx(4.375).epsilon(1e-6));
}

TEST_CASE("random policy with a zero budget declares from the prior") {
  ExperimentConfig cfg;
  cfg.fc = make_disjoint(4);
  cfg.ch = bsc(0.2);
  cfg.policy = {PolicyTag::Random, std::nullopt, std::nullopt};
  cfg.rule = StoppingRule::fixed_budget(0);
  cfg.episodes = 4000;
  cfg.seed = 5;
  cfg.class_tag = "disjoint:m=4";
  cfg.policy_tag = "random";
  cfg.bsc_p = 0.2;
  const ResultRow row = monte_carlo(cfg);
  CHECK(row.mean_tau == 0.0);
  CHECK(std::abs(row.pe - 0.75) <= 3.0 * row.se_pe);
}

TEST_CASE("exact expectation closed-form corner cases") {
  ExperimentConfig cfg = basic_config();
  cfg.rule = StoppingRule::sequential(0.5);
  const ExactResult immediate = exact_expectation(cfg, 8);
  CHECK(immediate.mean_tau_truncated == 0.0);
  CHECK(immediate.unstopped_mass == 0.0);

  // Near-noiseless threshold search: depth 2 plus at most one extra step.
  ExperimentConfig noiseless;
  noiseless.fc = make_threshold(4);
  noiseless.ch = bsc(1e-9);
  noiseless.policy = {PolicyTag::Ejs, std::nullopt, std::nullopt};
  noiseless.rule = StoppingRule::sequential(0.01);
  noiseless.episodes = 1;
  noiseless.class_tag = "threshold:m=4";
  noiseless.policy_tag = "ejs";
  noiseless.bsc_p = 1e-9;
  const ExactResult clean = exact_expectation(noiseless, 8);
  CHECK(clean.mean_tau_truncated <= 4.0);
  CHECK(clean.pe <= 0.01 + 1e-6);
}

TEST_CASE("exact expectation matches the two-function random walk") {
  // Two opposite-label functions on a BSC make the posterior a +-2-bit
  // log-odds walk that stops on |S| >= 2; every quantity has a closed form.
  ExperimentConfig cfg = basic_config();
  const ExactResult exact = exact_expectation(cfg, 12);
  CHECK(exact.mean_tau_truncated == doctest::Approx(2.9380184064).epsilon(1e-12));
  CHECK(exact.unstopped_mass == doctest::Approx(0.001073741824).epsilon(1e-12));
  CHECK(exact.pe == doctest::Approx(0.05929723904).epsilon(1e-9));

  double sum = 0.0, sum_sq = 0.0;
  const long episodes = 4000;
  for (long e = 0; e < episodes; ++e) {
    const double tau =
        static_cast<double>(std::min<long>(run_episode(cfg, e).stop_time, 12));
    sum += tau;
    sum_sq += tau * tau;
  }
  const double n = static_cast<double>(episodes);
  const double mean = sum / n;
  const double se = std::sqrt(std::max(sum_sq - sum * sum / n, 0.0) / (n - 1.0) / n);
  CHECK(std::abs(mean - exact.mean_tau_truncated) <= 3.0 * se);
}

TEST_CASE("exact expectation guards") {
  ExperimentConfig cfg = basic_config();
  CHECK_THROWS_AS(exact_expectation(cfg, 40), SizeError);
  cfg.policy = {PolicyTag::Random, std::nullopt, std::nullopt};
  cfg.policy_tag = "random";
  CHECK_THROWS_AS(exact_expectation(cfg, 4), std::invalid_argument);
}

TEST_CASE("invariant monitor accepts clean traces and flags corrupt ones") {
  for (double p : {0.2, 0.4}) {
    ExperimentConfig cfg;
    cfg.fc = make_sample_rich(5, 2);
    cfg.ch = bsc(p);
    cfg.policy = {PolicyTag::Ejs, std::nullopt, std::nullopt};
    cfg.rule = StoppingRule::sequential(1e-3);
    cfg.episodes = 1;
    cfg.seed = 99;
    cfg.record_beliefs = true;
    cfg.class_tag = "rich:m=5,labels=2";
    cfg.policy_tag = "ejs";
    cfg.bsc_p = p;
    for (long e = 0; e < 20; ++e) {
      EpisodeTrace trace = run_episode(cfg, e);
      CHECK(invariant_monitor(trace, cfg.fc, cfg.ch).empty());
      if (trace.stop_time > 0) {
        trace.beliefs[trace.stop_time / 2].probs[0] += 0.1;
        CHECK(!invariant_monitor(trace, cfg.fc, cfg.ch).empty());
      }
    }
  }
}

TEST_CASE("sequential episodes cross the threshold exactly at the stop time") {
  ExperimentConfig cfg = basic_config();
  cfg.fc = make_sample_rich(4, 2);
  cfg.class_tag = "rich:m=4,labels=2";
  cfg.rule = StoppingRule::sequential(0.05);
  cfg.record_beliefs = true;
  for (long e = 0; e < 50; ++e) {
    const EpisodeTrace trace = run_episode(cfg, e);
    for (long t = 0; t < trace.stop_time; ++t) CHECK(trace.beliefs[t].max() < 0.95);
    CHECK(trace.beliefs[trace.stop_time].max() >= 0.95);
    CHECK(trace.declaration == trace.beliefs[trace.stop_time].argmax());
  }
}

TEST_CASE("trace dump format") {
  ExperimentConfig cfg = basic_config();
  cfg.record_beliefs = true;
  const EpisodeTrace trace = run_episode(cfg, 1);
  const std::string text = format_trace(trace);
  CHECK(text.rfind("t,query,outcome,max_belief\n", 0) == 0);
  long lines = -1;  // discount the header
  for (char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == trace.stop_time);
}

TEST_CASE("thread resolution honors the environment cap") {
  setenv("ALAB_THREADS", "2", 1);
  CHECK(resolve_thread_count(8) == 2);
  CHECK(resolve_thread_count(1) == 1);
  unsetenv("ALAB_THREADS");
  CHECK(resolve_thread_count(3) == 3);
}

TEST_CASE("monte carlo is invariant to the thread count") {
  ExperimentConfig one = basic_config();
  one.episodes = 2000;
  one.threads = 1;
  ExperimentConfig three = one;
  three.threads = 3;
  CHECK(format_result_csv({monte_carlo(one)}) == format_result_csv({monte_carlo(three)}));
}

TEST_CASE("result csv round trip") {
  ExperimentConfig cfg = basic_config();
  cfg.episodes = 500;
  std::vector<ResultRow> rows = {monte_carlo(cfg)};
  cfg.rule = StoppingRule::fixed_budget(6);
  cfg.bsc_p = std::numeric_limits<double>::quiet_NaN();
  cfg.class_tag = "rich:m=2,labels=2";  // embedded comma must survive
  cfg.seed = 0xfedcba9876543210ull;     // above 2^63, still round-trips
  rows.push_back(monte_carlo(cfg));
  const std::string text = format_result_csv(rows);
  const auto parsed = parse_result_csv(text);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[1].class_tag == "rich:m=2,labels=2");
  CHECK(format_result_csv(parsed) == text);
  CHECK_THROWS_AS(parse_result_csv("bogus\n1,2,3\n"), ValidationError);
}
