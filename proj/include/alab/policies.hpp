#pragma once

#include <optional>

#include "alab/belief.hpp"
#include "alab/rng.hpp"

namespace alab {

enum class PolicyTag { Ejs, Msgbs, Random };

// Query policy. MSGBS carries its assumed noise rate q and the class's
// precomputed coherence parameter c*; its weight vector lives in the
// episode, not here.
struct PolicyKind {
  PolicyTag tag = PolicyTag::Ejs;
  std::optional<double> msgbs_q;       // in (0, 0.5)
  std::optional<double> msgbs_c_star;  // filled once per class

  void validate() const;
};

struct StoppingRule {
  enum class Mode { Sequential, FixedBudget };
  Mode mode = Mode::Sequential;
  double epsilon = 0.0;  // sequential: stop once max posterior >= 1 - epsilon
  long budget = 0;       // fixed: stop after exactly budget queries

  static StoppingRule sequential(double epsilon);
  static StoppingRule fixed_budget(long n);
};

// Chooses the next column to query.
//  - Ejs: deterministic EJS argmax of the belief.
//  - Msgbs: soft-decision binary search on the weight vector. With
//    W(x) = sum_i w_i h_i(x), queries the most balanced column when
//    min |W| <= c* + 1e-9; otherwise randomizes between the tightest
//    bracketing pair (smallest positive W vs largest negative W) with
//    probability |W-| : |W+|, falling back to the |W| argmin when no
//    bracket exists.
//  - Random: uniform over columns.
// `state` is the posterior for Ejs/Random and the MSGBS weights for Msgbs.
int select_query(const PolicyKind& kind, const Belief& state, const FunctionClass& fc,
                 const Channel& ch, EpisodeRng& rng);

// Multiplicative MSGBS weight update: agreeing functions keep factor
// (1-q), disagreeing ones q, then normalize. The observed binary outcome
// is identified with a label index. With q equal to the channel's true
// crossover probability this is exactly the Bayes update. q = 0.5 is a
// legal no-op; anything outside (0, 0.5] is rejected.
Belief msgbs_weight_update(const Belief& w, const FunctionClass& fc, int x,
                           int observed_label, double q);

bool should_stop(const StoppingRule& rule, const Belief& state, long t);

// Declared function index: posterior argmax, lowest index on ties.
int declare(const Belief& state);

}  // namespace alab
