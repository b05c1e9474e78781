#include "alab/belief.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alab/errors.hpp"

namespace alab {

namespace {

constexpr double kTieTol = 1e-12;

void check_dimensions(const Belief& b, const FunctionClass& fc, const Channel& ch) {
  if (b.size() != fc.num_functions)
    throw std::invalid_argument("belief length does not match the function count");
  if (fc.num_labels != ch.num_labels)
    throw std::invalid_argument("class labels do not match channel labels");
}

void check_column(const FunctionClass& fc, int x) {
  if (x < 0 || x >= fc.num_columns())
    throw std::invalid_argument("column index out of range");
}

// Mass per label at column x.
void label_mass(const Belief& b, const FunctionClass& fc, int x, std::vector<double>& mass) {
  mass.assign(fc.num_labels, 0.0);
  for (int i = 0; i < fc.num_functions; ++i) mass[fc.label(i, x)] += b.probs[i];
}

// EJS divergence at column x with caller-provided scratch buffers, so the
// argmax scan does not allocate per column.
double ejs_with_scratch(const Belief& b, const FunctionClass& fc, const Channel& ch,
                        int x, std::vector<double>& mass, std::vector<double>& mix) {
  label_mass(b, fc, x, mass);
  const int n = ch.num_outcomes;
  mix.assign(n, 0.0);
  for (int l = 0; l < fc.num_labels; ++l) {
    if (mass[l] <= 0.0) continue;
    for (int y = 0; y < n; ++y) mix[y] += mass[l] * ch.at(l, y);
  }

  double total = 0.0;
  for (int i = 0; i < fc.num_functions; ++i) {
    const double w = b.probs[i];
    if (w <= 0.0) continue;
    const int l = fc.label(i, x);
    const double rest = 1.0 - w;
    // D(f_l || (f_x - w f_l) / (1 - w)); the subtraction removes exactly
    // this function's share of its own label mass.
    double div = 0.0;
    for (int y = 0; y < n; ++y) {
      const double fy = ch.at(l, y);
      if (fy <= 0.0) continue;
      const double other = std::max(mix[y] - w * fy, 0.0) / rest;
      if (other <= 0.0) {
        div = std::numeric_limits<double>::infinity();
        break;
      }
      div += fy * std::log2(fy / other);
    }
    total += w * div;
  }
  return std::max(total, 0.0);
}

}  // namespace

double Belief::max() const { return *std::max_element(probs.begin(), probs.end()); }

int Belief::argmax() const {
  return static_cast<int>(std::max_element(probs.begin(), probs.end()) - probs.begin());
}

Belief uniform_belief(int m) {
  if (m < 2) throw std::invalid_argument("uniform_belief: m must be >= 2");
  return Belief{std::vector<double>(m, 1.0 / m)};
}

std::vector<double> predictive_density(const Belief& b, const FunctionClass& fc,
                                       const Channel& ch, int x) {
  check_dimensions(b, fc, ch);
  check_column(fc, x);
  std::vector<double> mass;
  label_mass(b, fc, x, mass);
  std::vector<double> out(ch.num_outcomes, 0.0);
  for (int l = 0; l < fc.num_labels; ++l) {
    if (mass[l] <= 0.0) continue;
    for (int y = 0; y < ch.num_outcomes; ++y) out[y] += mass[l] * ch.at(l, y);
  }
  return out;
}

Belief bayes_update(const Belief& b, const FunctionClass& fc, const Channel& ch,
                    int x, int y) {
  check_dimensions(b, fc, ch);
  check_column(fc, x);
  if (y < 0 || y >= ch.num_outcomes)
    throw std::invalid_argument("outcome index out of range");
  Belief next;
  next.probs.resize(b.size());
  double sum = 0.0;
  for (int i = 0; i < b.size(); ++i) {
    const double v = b.probs[i] * ch.at(fc.label(i, x), y);
    next.probs[i] = v;
    sum += v;
  }
  if (sum <= 0.0)
    throw SimulationError("bayes_update: observation has zero predictive mass");
  for (double& v : next.probs) v /= sum;
  return next;
}

double entropy(const Belief& b) {
  double h = 0.0;
  for (double v : b.probs)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

double u_of(const Belief& b) {
  double u = 0.0;
  for (double v : b.probs) {
    if (v <= 0.0) continue;
    if (v >= 1.0) return -std::numeric_limits<double>::infinity();
    u += v * std::log2((1.0 - v) / v);
  }
  return u;
}

double ejs(const Belief& b, const FunctionClass& fc, const Channel& ch, int x) {
  check_dimensions(b, fc, ch);
  check_column(fc, x);
  if (b.max() >= 1.0)
    throw SimulationError("ejs: degenerate belief, stopping should have fired");
  std::vector<double> mass, mix;
  return ejs_with_scratch(b, fc, ch, x, mass, mix);
}

ColumnValue ejs_argmax(const Belief& b, const FunctionClass& fc, const Channel& ch) {
  check_dimensions(b, fc, ch);
  if (b.max() >= 1.0)
    throw SimulationError("ejs_argmax: degenerate belief, stopping should have fired");
  std::vector<double> mass, mix;
  ColumnValue best;
  for (int x = 0; x < fc.num_columns(); ++x) {
    const double v = ejs_with_scratch(b, fc, ch, x, mass, mix);
    if (best.column < 0 || v > best.bits + kTieTol) {
      best.column = x;
      best.bits = v;
    }
  }
  return best;
}

}  // namespace alab
