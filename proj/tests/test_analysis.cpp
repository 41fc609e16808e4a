#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "circulus/analysis.hpp"
#include "support.hpp"

using namespace circulus;

namespace {

const Precision kP(256);

}  // namespace

TEST_CASE("convergence slopes") {
  struct Case {
    Method method;
    int order;
  };
  for (Case c : {Case{Method::archimedes, 2}, Case{Method::huygens_vii, 4}, Case{Method::cusa, 4},
                 Case{Method::snell_ix, 4}, Case{Method::huygens_xvi_upper, 6}, Case{Method::huygens_final_lower, 6},
                 Case{Method::schuh27_lower, 6}}) {
    CAPTURE(to_string(c.method));
    OrderEstimate est = estimate_order(c.method, 6, 4, 10, kP);
    CAPTURE(est.slope);
    CHECK(est.order == c.order);
    CHECK(std::fabs(est.slope + c.order) < 0.05);
    CHECK(est.samples.size() == 7);
    for (std::size_t i = 1; i < est.samples.size(); ++i) CHECK(est.samples[i].error.hi() < est.samples[i - 1].error.lo());
  }
  OrderEstimate arch = estimate_order(Method::archimedes, 6, 0, 8, kP);
  CHECK(std::fabs(arch.slope + 2) < 0.05);
}

TEST_CASE("errors carry the sign of their side") {
  for (Method m : {Method::huygens_vii, Method::cusa, Method::huygens_final_lower, Method::schuh27_lower,
                   Method::snell_ix, Method::huygens_xvi_upper}) {
    OrderEstimate est = estimate_order(m, 6, 1, 6, kP);
    for (const ErrorSample& s : est.samples) CHECK(s.error.positive());
  }
}

TEST_CASE("order six beats order four from n = 12 on") {
  OrderEstimate six = estimate_order(Method::huygens_xvi_upper, 6, 1, 8, kP);
  for (Method m : {Method::huygens_vii, Method::cusa, Method::snell_ix}) {
    OrderEstimate four = estimate_order(m, 6, 1, 8, kP);
    for (std::size_t i = 0; i < four.samples.size(); ++i) CHECK(six.samples[i].error.hi() < four.samples[i].error.lo());
  }
}

TEST_CASE("coefficients approach the expected constants monotonically") {
  Enclosure pi = pi_reference(kP);
  Enclosure pi5 = pi.square().square() * pi;
  Enclosure expected = pi5 / 480;
  double previous_gap = 1e9;
  for (int k = 4; k <= 9; ++k) {
    OrderEstimate est = estimate_order(Method::huygens_vii, 6, k - 3, k, kP);
    double gap = std::fabs((est.coefficient - expected).mid().to_double());
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }
}

TEST_CASE("coefficient table") {
  std::vector<CoefficientRow> rows = coefficient_table(kP);
  REQUIRE(rows.size() == 6);
  for (const CoefficientRow& r : rows) {
    CAPTURE(to_string(r.method));
    CHECK(r.within_3_percent == Truth::holds);
  }
  CHECK(support::truncates_to(*rows[0].expected, "0.637541"));
  CHECK(rows[0].relative_gap < 0.02);
  CHECK(support::truncates_to(*rows[2].expected, "15.30098"));
  CHECK(support::truncates_to(rows[2].measured, "15.301"));
  CHECK(support::truncates_to(*rows[3].expected, "0.13483"));
  CHECK_FALSE(rows[4].expected.has_value());
  CHECK(support::truncates_to(rows[4].measured, "0.1448"));
}

TEST_CASE("arc expansions") {
  std::vector<Rational> grid;
  for (int i = 1; i <= 25; ++i) grid.push_back(Rational(i, 100));
  Precision p(160);
  CHECK(arc_expansion_check(Method::cusa, grid, p).truth == Truth::holds);
  CHECK(arc_expansion_check(Method::snell, grid, p).truth == Truth::holds);
  Enclosure x = Enclosure::point(Rational(1, 10), p);
  Enclosure deficiency = x - cusa_lower_arc(x);
  Enclosure lead = Enclosure::point(Rational(1, 18000000), p);
  CHECK(strictly_less(lead / 2, deficiency) == Truth::holds);
  CHECK(strictly_less(deficiency, lead * Rational(3, 2)) == Truth::holds);
  Enclosure excess = snell_upper_arc(x) - x;
  Enclosure snell_lead = Enclosure::point(Rational(1, 2000000), p);
  CHECK(strictly_less(excess, snell_lead * Rational(11, 10)) == Truth::holds);
  CHECK(strictly_less(snell_lead, excess) == Truth::holds);
  CHECK_THROWS_AS(arc_expansion_check(Method::cusa, {Rational(1, 2)}, p), DomainError);
  CHECK_THROWS_AS(arc_expansion_check(Method::archimedes, grid, p), DomainError);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(estimate_order(Method::archimedes, 6, 0, 2, kP), InsufficientSamples);
  // At 64 bits the order-6 error at n = 6144 is below the enclosure width.
  CHECK_THROWS_AS(estimate_order(Method::huygens_xvi_upper, 6, 7, 10, Precision(64)), IndeterminateError);
}
