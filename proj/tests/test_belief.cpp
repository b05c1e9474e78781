#include <cmath>
#include <limits>

#include "alab/belief.hpp"
#include "alab/errors.hpp"
#include "alab/rng.hpp"
#include "doctest.h"

using namespace alab;

namespace {

// Naive EJS evaluation straight off the defining sum, mixing the other
// functions one by one. Kept deliberately independent of the library's
// label-mass implementation.
double ejs_naive(const Belief& b, const FunctionClass& fc, const Channel& ch, int x) {
  double total = 0.0;
  for (int i = 0; i < fc.num_functions; ++i) {
    if (b.probs[i] <= 0.0) continue;
    std::vector<double> mix(ch.num_outcomes, 0.0);
    for (int j = 0; j < fc.num_functions; ++j) {
      if (j == i) continue;
      for (int y = 0; y < ch.num_outcomes; ++y)
        mix[y] += b.probs[j] / (1.0 - b.probs[i]) * ch.at(fc.label(j, x), y);
    }
    total += b.probs[i] * kl_divergence(ch.row(fc.label(i, x)), mix);
  }
  return total;
}

Belief dirichlet(int m, EpisodeRng& rng) {
  Belief b;
  b.probs.resize(m);
  double sum = 0.0;
  for (double& v : b.probs) {
    v = -std::log(1.0 - rng.next_unit());
    sum += v;
  }
  for (double& v : b.probs) v /= sum;
  return b;
}

}  // namespace

TEST_CASE("uniform belief and U at the prior") {
  const Belief b = uniform_belief(4);
  CHECK(b.probs == std::vector<double>{0.25, 0.25, 0.25, 0.25});
  CHECK(uniform_belief(2).probs == std::vector<double>{0.5, 0.5});
  CHECK(u_of(uniform_belief(5)) == doctest::Approx(2.0).epsilon(1e-12));  // log2(M-1)
}

TEST_CASE("predictive density") {
  const Channel ch = bsc(0.2);
  const FunctionClass fc = make_disjoint(2);  // column 0 labels (+1, -1)
  auto pred = predictive_density(Belief{{0.5, 0.5}}, fc, ch, 0);
  CHECK(pred[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pred[1] == doctest::Approx(0.5).epsilon(1e-12));

  pred = predictive_density(Belief{{1.0, 0.0}}, fc, ch, 0);
  CHECK(pred[0] == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(pred[1] == doctest::Approx(0.8).epsilon(1e-12));

  // Column u_0 of the threshold class labels everything +1.
  const FunctionClass th = make_threshold(2);
  for (double w : {0.1, 0.6, 0.9}) {
    pred = predictive_density(Belief{{w, 1.0 - w}}, th, ch, 0);
    CHECK(pred[0] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(pred[1] == doctest::Approx(0.8).epsilon(1e-12));
  }
}

TEST_CASE("bayes update") {
  const Channel ch = bsc(0.2);
  const FunctionClass fc = make_disjoint(2);
  const Belief updated = bayes_update(Belief{{0.5, 0.5}}, fc, ch, 0, 1);
  CHECK(updated.probs[0] == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(updated.probs[1] == doctest::Approx(0.2).epsilon(1e-12));

  // Agreement columns change nothing; degenerate beliefs absorb.
  const FunctionClass th = make_threshold(2);
  const Belief same = bayes_update(Belief{{0.3, 0.7}}, th, ch, 0, 0);
  CHECK(same.probs[0] == doctest::Approx(0.3).epsilon(1e-12));
  const Belief corner = bayes_update(Belief{{1.0, 0.0}}, fc, ch, 0, 0);
  CHECK(corner.probs == std::vector<double>{1.0, 0.0});

  const Channel dead = make_channel({{1.0, 0.0}, {1.0, 0.0}});
  CHECK_THROWS_AS(bayes_update(Belief{{0.5, 0.5}}, fc, dead, 0, 1), SimulationError);
}

TEST_CASE("entropy and U") {
  CHECK(entropy(uniform_belief(4)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(entropy(Belief{{1.0, 0.0, 0.0}}) == 0.0);
  CHECK(entropy(Belief{{0.8, 0.2}}) == doctest::Approx(0.7219280948873623).epsilon(1e-12));

  CHECK(u_of(Belief{{0.5, 0.5}}) == doctest::Approx(0.0));
  CHECK(u_of(Belief{{0.9, 0.1}}) ==
        doctest::Approx(-0.8 * std::log2(9.0)).epsilon(1e-12));
  CHECK(u_of(Belief{{1.0, 0.0}}) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("ejs closed forms") {
  const Channel ch = bsc(0.2);
  const FunctionClass fc = make_disjoint(2);
  // With two functions every interior belief sees the full pairwise
  // divergence: both mixtures collapse to the single other row.
  for (double w : {0.01, 0.3, 0.5, 0.77, 0.99})
    CHECK(ejs(Belief{{w, 1.0 - w}}, fc, ch, 0) == doctest::Approx(1.2).epsilon(1e-12));

  const FunctionClass th = make_threshold(2);
  CHECK(ejs(Belief{{0.4, 0.6}}, th, ch, 0) == doctest::Approx(0.0));  // agreement column

  CHECK_THROWS_AS(ejs(Belief{{1.0, 0.0}}, fc, ch, 0), SimulationError);
}

TEST_CASE("ejs matches a naive second evaluation") {
  const Channel ch = bsc(0.2);
  const FunctionClass rich = make_sample_rich(3, 2);
  const Belief uniform = uniform_belief(3);
  const int split = [&] {
    for (int x = 0; x < rich.num_columns(); ++x)
      if (rich.label(0, x) == 1 && rich.label(1, x) == 0 && rich.label(2, x) == 0) return x;
    return -1;
  }();
  REQUIRE(split >= 0);
  const double expected = 0.4 + (2.0 / 3.0) * (1.0 - (-0.2 * std::log2(0.2) -
                                                      0.8 * std::log2(0.8)));
  CHECK(ejs(uniform, rich, ch, split) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(ejs(uniform, rich, ch, split) ==
        doctest::Approx(ejs_naive(uniform, rich, ch, split)).epsilon(1e-12));

  EpisodeRng rng(5, 9);
  const Channel ch3 = make_channel({{0.7, 0.2, 0.1}, {0.1, 0.7, 0.2}, {0.2, 0.1, 0.7}});
  const FunctionClass rich3 = make_sample_rich(2, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const Belief b2 = dirichlet(3, rng);
    const Belief b3 = dirichlet(2, rng);
    for (int x = 0; x < rich.num_columns(); ++x)
      CHECK(ejs(b2, rich, ch, x) == doctest::Approx(ejs_naive(b2, rich, ch, x)).epsilon(1e-11));
    for (int x = 0; x < rich3.num_columns(); ++x)
      CHECK(ejs(b3, rich3, ch3, x) ==
            doctest::Approx(ejs_naive(b3, rich3, ch3, x)).epsilon(1e-11));
  }
}

TEST_CASE("ejs argmax and ties") {
  const Channel ch = bsc(0.2);
  const FunctionClass two = make_disjoint(2);
  // Both columns tie at C1; the lowest index wins.
  CHECK(ejs_argmax(Belief{{0.5, 0.5}}, two, ch).column == 0);
  CHECK(ejs_argmax(Belief{{0.9, 0.1}}, two, ch).column == 0);

  const FunctionClass th = make_threshold(3);
  const Belief b{{0.5, 0.25, 0.25}};
  const auto best = ejs_argmax(b, th, ch);
  int naive_best = 0;
  double naive_val = -1.0;
  for (int x = 0; x < th.num_columns(); ++x) {
    const double v = ejs_naive(b, th, ch, x);
    if (v > naive_val + 1e-12) {
      naive_val = v;
      naive_best = x;
    }
  }
  CHECK(best.column == naive_best);
  CHECK(th.column_ids[best.column] == "u1");  // the prefix-mass balancing cell
  CHECK(best.bits >= 1.0 - (-0.2 * std::log2(0.2) - 0.8 * std::log2(0.8)) - 1e-9);

  // A confident belief wants the column isolating the leader. On a
  // symmetric channel that column ties exactly with its complement, and
  // the complement sits earlier in enumeration order.
  const FunctionClass rich = make_sample_rich(3, 2);
  const Belief confident_b{{0.98, 0.01, 0.01}};
  const auto confident = ejs_argmax(confident_b, rich, ch);
  const auto winner = rich.column(confident.column);
  CHECK(std::vector<int>(winner.begin(), winner.end()) == std::vector<int>{0, 1, 1});
  const int isolator = [&] {
    for (int x = 0; x < rich.num_columns(); ++x)
      if (rich.label(0, x) == 1 && rich.label(1, x) == 0 && rich.label(2, x) == 0) return x;
    return -1;
  }();
  CHECK(ejs(confident_b, rich, ch, isolator) ==
        doctest::Approx(confident.bits).epsilon(1e-12));
  CHECK(confident.bits >= 0.98 * 1.2 - 1e-9);
}

TEST_CASE("one-step expected U drop equals the EJS divergence") {
  const Channel ch = bsc(0.2);
  EpisodeRng rng(77, 2);
  for (const FunctionClass& fc :
       {make_disjoint(5), make_threshold(5), make_sample_rich(4, 2)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const Belief b = dirichlet(fc.num_functions, rng);
      const double u = u_of(b);
      for (int x = 0; x < fc.num_columns(); ++x) {
        const auto pred = predictive_density(b, fc, ch, x);
        double expected_u = 0.0;
        for (int y = 0; y < ch.num_outcomes; ++y)
          expected_u += pred[y] * u_of(bayes_update(b, fc, ch, x, y));
        CHECK(expected_u == doctest::Approx(u - ejs(b, fc, ch, x)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("bayes updates stay on the simplex") {
  const Channel ch = bsc(0.3);
  const FunctionClass fc = make_sample_rich(4, 2);
  EpisodeRng rng(4242, 0);
  Belief b = dirichlet(4, rng);
  for (int step = 0; step < 10000; ++step) {
    const int x = rng.uniform_index(fc.num_columns());
    const int y = rng.sample_pmf(predictive_density(b, fc, ch, x));
    b = bayes_update(b, fc, ch, x, y);
    double sum = 0.0;
    for (double v : b.probs) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    if (b.max() > 1.0 - 1e-9) b = dirichlet(4, rng);
  }
}
