#include "alab/policies.hpp"

#include <cmath>
#include <limits>

#include "alab/errors.hpp"

namespace alab {

namespace {

constexpr double kBalanceTol = 1e-9;

}  // namespace

void PolicyKind::validate() const {
  if (tag == PolicyTag::Msgbs) {
    if (!msgbs_q || !(*msgbs_q > 0.0 && *msgbs_q < 0.5))
      throw ValidationError("msgbs assumed noise q must lie in (0, 0.5)");
  }
}

StoppingRule StoppingRule::sequential(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ValidationError("sequential stopping needs epsilon in (0, 1)");
  return {Mode::Sequential, epsilon, 0};
}

StoppingRule StoppingRule::fixed_budget(long n) {
  // n = 0 is allowed: declare straight from the prior.
  if (n < 0) throw ValidationError("fixed budget must be nonnegative");
  return {Mode::FixedBudget, 0.0, n};
}

int select_query(const PolicyKind& kind, const Belief& state, const FunctionClass& fc,
                 const Channel& ch, EpisodeRng& rng) {
  switch (kind.tag) {
    case PolicyTag::Ejs:
      return ejs_argmax(state, fc, ch).column;

    case PolicyTag::Random:
      return rng.uniform_index(fc.num_columns());

    case PolicyTag::Msgbs: {
      if (!fc.binary())
        throw std::invalid_argument("msgbs runs on binary function classes only");
      if (!kind.msgbs_c_star)
        throw std::invalid_argument("msgbs needs the class coherence c* precomputed");
      const int a = fc.num_columns();
      std::vector<double> w(a);
      int argmin_abs = 0;
      for (int x = 0; x < a; ++x) {
        double sum = 0.0;
        for (int i = 0; i < fc.num_functions; ++i)
          sum += fc.label(i, x) == 1 ? state.probs[i] : -state.probs[i];
        w[x] = sum;
        if (std::abs(sum) < std::abs(w[argmin_abs])) argmin_abs = x;
      }
      if (std::abs(w[argmin_abs]) <= *kind.msgbs_c_star + kBalanceTol) return argmin_abs;

      int pos = -1, neg = -1;  // smallest positive and largest negative W
      for (int x = 0; x < a; ++x) {
        if (w[x] > 0.0 && (pos < 0 || w[x] < w[pos])) pos = x;
        if (w[x] < 0.0 && (neg < 0 || w[x] > w[neg])) neg = x;
      }
      if (pos < 0 || neg < 0) return argmin_abs;  // no bracketing pair
      const double take_pos = -w[neg] / (w[pos] - w[neg]);
      return rng.next_unit() < take_pos ? pos : neg;
    }
  }
  throw std::invalid_argument("select_query: unknown policy");
}

Belief msgbs_weight_update(const Belief& w, const FunctionClass& fc, int x,
                           int observed_label, double q) {
  if (!fc.binary())
    throw std::invalid_argument("msgbs_weight_update: binary function classes only");
  if (!(q > 0.0 && q <= 0.5))
    throw std::invalid_argument("msgbs_weight_update: q must lie in (0, 0.5]");
  if (observed_label != 0 && observed_label != 1)
    throw std::invalid_argument("msgbs_weight_update: observed label must be 0 or 1");
  if (w.size() != fc.num_functions)
    throw std::invalid_argument("msgbs_weight_update: weight length mismatch");

  Belief next;
  next.probs.resize(w.size());
  double sum = 0.0;
  for (int i = 0; i < w.size(); ++i) {
    const double factor = fc.label(i, x) == observed_label ? 1.0 - q : q;
    next.probs[i] = w.probs[i] * factor;
    sum += next.probs[i];
  }
  for (double& v : next.probs) v /= sum;
  return next;
}

bool should_stop(const StoppingRule& rule, const Belief& state, long t) {
  if (rule.mode == StoppingRule::Mode::Sequential)
    return state.max() >= 1.0 - rule.epsilon;
  return t >= rule.budget;
}

int declare(const Belief& state) { return state.argmax(); }

}  // namespace alab
