#pragma once

#include <vector>

#include "alab/channel.hpp"
#include "alab/hypotheses.hpp"

namespace alab {

// Posterior over the M functions. Kept on the simplex within 1e-12 by
// renormalizing after every update.
struct Belief {
  std::vector<double> probs;

  int size() const { return static_cast<int>(probs.size()); }
  double max() const;
  int argmax() const;  // lowest index on ties
};

Belief uniform_belief(int m);

// Outcome distribution of querying column x under belief b:
//   f_x(y) = sum_i b_i f_{h_i(x)}(y).
std::vector<double> predictive_density(const Belief& b, const FunctionClass& fc,
                                       const Channel& ch, int x);

// Bayes refinement after observing outcome y at column x. Throws
// SimulationError when y has zero predictive mass.
Belief bayes_update(const Belief& b, const FunctionClass& fc, const Channel& ch,
                    int x, int y);

// Shannon entropy in bits.
double entropy(const Belief& b);

// Average log-likelihood-ratio statistic U(b) = sum_i b_i log2((1-b_i)/b_i).
// An entry at exactly 1 drives the value to -inf.
double u_of(const Belief& b);

// Extrinsic Jensen-Shannon divergence of querying column x:
//   sum_i b_i D( f_{h_i(x)} || (f_x - b_i f_{h_i(x)}) / (1 - b_i) ),
// the belief-weighted divergence of each function's outcome law from the
// mixture of all the others. Zero-mass functions contribute nothing.
// Requires an interior belief (max b_i < 1); throws SimulationError at a
// degenerate belief, where the stopping rule should already have fired.
double ejs(const Belief& b, const FunctionClass& fc, const Channel& ch, int x);

struct ColumnValue {
  int column = -1;
  double bits = 0.0;
};

// Column maximizing the EJS divergence; ties within 1e-12 resolve to the
// lowest index so traces are reproducible.
ColumnValue ejs_argmax(const Belief& b, const FunctionClass& fc, const Channel& ch);

}  // namespace alab
