#include <cmath>
#include <limits>

#include "alab/bounds.hpp"
#include "alab/errors.hpp"
#include "doctest.h"

using namespace alab;

namespace {

// Direct transcription of the lower-bound expression, kept separate from
// the library evaluation.
double lower_bound_oracle(int m, double eps, double c, double c1, double c2) {
  const double l4e = std::log2(4.0 / eps);
  const double first =
      ((1.0 - 3.0 / l4e - eps / 2.0 * std::log2(1.0 / eps)) * std::log2(double(m)) - 2.0) / c;
  const double second =
      (std::log2((1.0 - eps) / eps) - 2.0 * std::log2(l4e) - std::log2(c2) - 4.0) / c1;
  return std::max(first + second, 0.0);
}

}  // namespace

TEST_CASE("lower bound evaluation") {
  // Small instance: both bracket terms are negative, the positive part clamps.
  CHECK(lower_bound_queries(2, 0.25, 1.0, 1.0, 4.0) == 0.0);

  const double big = lower_bound_queries(1024, 1e-3, 1.0, 1.0, 4.0);
  CHECK(big == doctest::Approx(lower_bound_oracle(1024, 1e-3, 1.0, 1.0, 4.0)).epsilon(1e-12));
  CHECK(big == doctest::Approx(2.2457).epsilon(2e-3));

  // Tightening epsilon can only push the requirement up.
  CHECK(lower_bound_queries(1024, 1e-6, 1.0, 1.0, 4.0) > big);

  CHECK_THROWS_AS(
      lower_bound_queries(1024, 1e-3, 1.0, 1.0, std::numeric_limits<double>::infinity()),
      ValidationError);
  CHECK_THROWS_AS(lower_bound_queries(1024, 1e-3, 0.0, 1.0, 4.0), std::invalid_argument);
}

TEST_CASE("lower bound monotonicity on a grid") {
  // Both bracket terms are positive at eps = 1e-6 (the confirmation term
  // changes sign near 1e-4), so better channel constants can only lower
  // the bound and a bigger class can only raise it.
  const double base = lower_bound_queries(1024, 1e-6, 0.5, 1.0, 4.0);
  CHECK(lower_bound_queries(1024, 1e-6, 1.0, 1.0, 4.0) <= base);
  CHECK(lower_bound_queries(1024, 1e-6, 0.5, 2.0, 4.0) <= base);
  CHECK(lower_bound_queries(4096, 1e-6, 0.5, 1.0, 4.0) >= base);
  for (int m : {16, 64, 256}) {
    CHECK(lower_bound_queries(m, 1e-6, 0.5, 1.0, 4.0) <=
          lower_bound_queries(4 * m, 1e-6, 0.5, 1.0, 4.0));
  }
}

TEST_CASE("upper bound evaluation") {
  const auto equal = upper_bound_queries(5, 0.01, 0.4, 0.4, 4.0);
  CHECK(equal.single_phase > 0.0);
  CHECK(equal.two_phase > 0.0);

  const BscConstants k = bsc_constants(0.2);
  const double rt = rho_tilde(5, 0.01);
  const auto pair = upper_bound_queries(5, 0.01, k.c, rt * k.c1, k.c2);
  CHECK(std::isfinite(pair.single_phase));
  CHECK(std::isfinite(pair.two_phase));
  // Recompute the two-phase expression inline.
  const double expect = (std::log2(5.0) + std::log2(std::max(std::log2(5.0),
                                                             std::log2(100.0)))) /
                            k.c +
                        std::log2(100.0) / (rt * k.c1) +
                        3.0 * 16.0 * k.c2 * k.c2 / (k.c * rt * k.c1);
  CHECK(pair.two_phase == doctest::Approx(expect).epsilon(1e-12));

  // The confirmation term vanishes as beta grows.
  const auto huge_beta = upper_bound_queries(5, 0.01, k.c, 1e12, k.c2);
  CHECK(huge_beta.two_phase ==
        doctest::Approx((std::log2(5.0) + std::log2(std::log2(100.0))) / k.c)
            .epsilon(1e-6));

  // Degenerate inner logs: evaluating the max first keeps them safe.
  CHECK(std::isfinite(upper_bound_queries(2, 0.5, 0.4, 0.4, 4.0).two_phase));

  CHECK_THROWS_AS(upper_bound_queries(5, 0.01, 0.0, 1.0, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(upper_bound_queries(5, 0.01, 1.0, 0.5, 4.0), std::invalid_argument);
}

TEST_CASE("confident-belief threshold") {
  CHECK(rho_tilde(5, 0.01) == doctest::Approx(0.869176).epsilon(1e-6));
  CHECK(rho_tilde(2, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rho_tilde(4, 0.25) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("bsc closed forms") {
  const BscConstants k = bsc_constants(0.2);
  CHECK(k.c == doctest::Approx(0.2780719051126377).epsilon(1e-12));
  CHECK(k.c1 == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(k.c2 == doctest::Approx(4.0).epsilon(1e-12));

  const BscConstants near_half = bsc_constants(0.4999);
  CHECK(near_half.c < 1e-7);
  CHECK(near_half.c1 < 1e-3);
  CHECK(near_half.c2 == doctest::Approx(1.0).epsilon(1e-3));

  for (double p : {0.1, 0.2, 0.3, 0.4}) {
    const BscConstants c = bsc_constants(p);
    CHECK(c.c1 >= 2.0 * c.c - 1e-12);
  }
  CHECK_THROWS_AS(bsc_constants(0.5), std::invalid_argument);
  CHECK_THROWS_AS(bsc_constants(0.0), std::invalid_argument);
}

TEST_CASE("lambda maximization") {
  const auto at02 = lambda_p(0.2);
  CHECK(at02.value == doctest::Approx(0.05).epsilon(1e-8));
  CHECK(at02.maximizer == doctest::Approx(1.0 / 3.0).epsilon(1e-7));

  // Stationarity gives p' = sqrt(p)/(sqrt(p) + sqrt(1-p)).
  const auto at01 = lambda_p(0.1);
  CHECK(at01.maximizer == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(at01.value == doctest::Approx(0.1).epsilon(1e-8));

  CHECK(lambda_p(0.499).value < 1e-5);

  for (double p : {0.05, 0.15, 0.25, 0.35, 0.45}) {
    double grid_best = 0.0;
    for (double q = p + 1e-5; q < 0.5; q += 1e-5)
      grid_best = std::max(grid_best,
                           0.25 * (1.0 - q * (1.0 - p) / (1.0 - q) - (1.0 - q) * p / q));
    CHECK(lambda_p(p).value == doctest::Approx(grid_best).epsilon(1e-6));
  }
}

TEST_CASE("baseline bounds") {
  CHECK(ngbs_bound(1.0, 0.01, 0.2) ==
        doctest::Approx(std::log2(100.0) / 0.09).epsilon(1e-12));
  CHECK(ngbs_bound(8.0, 0.01, 0.2) ==
        doctest::Approx(8.0 * (3.0 + std::log2(100.0)) / 0.09).epsilon(1e-12));
  CHECK(ngbs_bound(4.0, 0.01, 0.49) > ngbs_bound(4.0, 0.01, 0.2));

  CHECK(msgbs_bound(5, 0.01, 0.2, 0.0) ==
        doctest::Approx((std::log2(5.0) + std::log2(100.0)) / 0.05).epsilon(1e-6));
  // Disjoint row: c* = 1 - 2/M turns the denominator into 4 lambda / M.
  const double disjoint5 = msgbs_bound(5, 0.01, 0.2, 1.0 - 2.0 / 5.0);
  CHECK(disjoint5 ==
        doctest::Approx(5.0 * (std::log2(5.0) + std::log2(100.0)) / (4.0 * 0.05))
            .epsilon(1e-6));
  CHECK_THROWS_AS(msgbs_bound(5, 0.01, 0.2, 1.0), std::invalid_argument);
}

TEST_CASE("class bound reports") {
  const BoundReport rich = class_bound_report("rich", 5, 0.01, 0.2);
  CHECK(rich.alpha == doctest::Approx(0.2780719051126377).epsilon(1e-10));
  CHECK(rich.beta == doctest::Approx(1.043011).epsilon(1e-5));
  CHECK(rich.lower_bound <= rich.ub_two_phase);

  const BoundReport threshold = class_bound_report("threshold", 8, 0.01, 0.2);
  CHECK(threshold.alpha == threshold.beta);
  CHECK(threshold.alpha == doctest::Approx(bsc_constants(0.2).c).epsilon(1e-12));

  const BoundReport disjoint = class_bound_report("disjoint", 4, 0.01, 0.2);
  CHECK(disjoint.alpha == doctest::Approx(1.2 / 4.0).epsilon(1e-12));
  CHECK(disjoint.msgbs ==
        doctest::Approx(msgbs_bound(4, 0.01, 0.2, 0.5)).epsilon(1e-12));

  CHECK_THROWS_AS(class_bound_report("interval", 4, 0.01, 0.2), std::invalid_argument);

  // Sandwich consistency across a small grid.
  for (int m : {2, 5, 10})
    for (double eps : {0.1, 0.01, 1e-3}) {
      const BoundReport r = class_bound_report("rich", m, eps, 0.2);
      CHECK(r.lower_bound <= r.ub_two_phase);
      CHECK(r.lower_bound <= r.ub_single_alpha);
    }
}

TEST_CASE("constants sweep rows") {
  const auto rows = constants_sweep({0.2, 0.25});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].c == doctest::Approx(0.2780719051126377).epsilon(1e-12));
  CHECK(rows[0].c1 == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(rows[0].half_minus_p_sq == doctest::Approx(0.09).epsilon(1e-12));
  CHECK(rows[0].lambda == doctest::Approx(0.05).epsilon(1e-8));
  CHECK(rows[1].half_minus_p_sq == doctest::Approx(0.0625).epsilon(1e-12));
  for (const auto& row : rows) CHECK(row.c1 >= 2.0 * row.c - 1e-12);
}
