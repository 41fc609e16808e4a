#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circulus/barycenter.hpp"
#include "circulus/polygon.hpp"
#include "support.hpp"

using namespace circulus;
using support::truncates_to;

namespace {

const Precision kP(96);

Enclosure num(const char* text, Precision p = kP) { return Enclosure::point(Rational::parse(text), p); }
Enclosure pi_part(long num, long den, Precision p = kP) {
  return (num * pi_reference(p.plus(32)) / den).with_precision(p);
}
Enclosure one(Precision p = kP) { return Enclosure::point(1, p); }

}  // namespace

TEST_CASE("semicircle") {
  SegmentGeometry g = segment(one(), pi_reference(kP));
  CHECK(g.a.contains(Rational(1)));
  CHECK(g.b.contains(Rational(2)));
  CHECK(g.sigma.overlaps(pi_part(1, 2)));
  CHECK_FALSE(g.tangent.has_value());
  CHECK(g.xbar.overlaps(Enclosure::point(Rational(4, 3), kP) / pi_reference(kP)));
  CHECK(truncates_to(g.xbar, "0.42441318157"));
  CHECK_THROWS_AS(balance_check(g), DomainError);
}

TEST_CASE("quarter circle segment") {
  SegmentGeometry g = segment(one(), pi_part(1, 2));
  CHECK(truncates_to(g.sigma, "0.28539816339744"));
  CHECK(truncates_to(g.xbar, "0.82587167902434"));
  CHECK(g.tangent.has_value());
  CHECK(g.tangent->overlaps(tangent_triangle_oracle(one(), pi_part(1, 2))));
}

TEST_CASE("defining identities") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> angle(2, 3141);
  for (int i = 0; i < 40; ++i) {
    Enclosure r = Enclosure::point(Rational(1 + i % 4, 2), kP);
    Enclosure theta = Enclosure::point(Rational(angle(rng), 1000), kP);
    SegmentGeometry g = segment(r, theta);
    CHECK((g.xi + g.xbar).overlaps(r));
    CHECK((g.b.square() / 4).overlaps(g.a * (2 * r - g.a)));
    Enclosure s = sin(theta.scaled(-1));
    CHECK(g.delta.overlaps(r.square() * s * (1 - cos(theta.scaled(-1)))));
    CHECK(g.sigma.overlaps(r.square() * (theta - sin(theta)) / 2));
    CHECK(g.c.overlaps(r * sin(theta)));
    CHECK(g.tangent->overlaps(tangent_triangle_oracle(r, theta)));
  }
}

TEST_CASE("thin segments approach the parabolic ratio") {
  SegmentGeometry g = segment(one(), num("0.01"));
  Enclosure gap = g.sigma / g.delta - Enclosure::point(Rational(4, 3), kP);
  CHECK(gap.positive());
  CHECK(gap.hi() < Dyadic(mpz_class(1), -13));
  CHECK(g.sigma.width() < Dyadic(mpz_class(1), -90));
}

TEST_CASE("barycenter formula") {
  CHECK(barycenter_exact(one(), pi_reference(kP)).overlaps(Enclosure::point(Rational(4, 3), kP) / pi_reference(kP)));
  CHECK(truncates_to(barycenter_exact(one(), pi_part(1, 2)), "0.825871679024"));
  for (const char* t : {"0.05", "0.3", "1.7", "3.1"}) {
    Enclosure theta = num(t);
    CHECK(barycenter_exact(Enclosure::point(2, kP), theta).overlaps(2 * barycenter_exact(one(), theta)));
  }
  CHECK_THROWS_AS(barycenter_exact(one(), num("0.0001")), IllConditioned);
  CHECK_THROWS_AS(barycenter_exact(one(), num("3.2")), DomainError);
  CHECK_THROWS_AS(barycenter_exact(num("-1"), num("1")), DomainError);
  CHECK_THROWS_AS(segment(one(), num("0")), DomainError);
}

TEST_CASE("series and direct forms of theta - sin theta agree") {
  for (const char* t : {"0.001", "0.1", "0.2499"}) {
    Enclosure theta = num(t, Precision(128));
    Enclosure series = theta_minus_sin(theta);
    Enclosure direct = theta - sin(theta);
    CHECK(series.overlaps(direct));
    CHECK(series.width() <= direct.width());
  }
}

TEST_CASE("quadrature oracle") {
  Precision p(64);
  Enclosure pi = pi_reference(p);
  Enclosure semicircle = barycenter_oracle(one(p), pi);
  Enclosure expected = Enclosure::point(Rational(4, 3), p) / pi;
  CHECK(semicircle.overlaps(expected));
  CHECK(semicircle.width() < Dyadic(mpz_class(1), -30));
  CHECK(std::abs(semicircle.mid().to_double() - expected.mid().to_double()) < 1e-9);
  Enclosure quarter = (pi / 2).with_precision(p);
  CHECK(barycenter_oracle(one(p), quarter).overlaps(barycenter_exact(one(p), quarter)));
  Enclosure thin = Enclosure::point(Rational(1, 10), p);
  CHECK(barycenter_oracle(one(p), thin).overlaps(barycenter_exact(one(p), thin)));
}

TEST_CASE("oracle is independent of chunking") {
  Precision p(64);
  Enclosure theta = Enclosure::point(Rational(7, 5), p);
  Enclosure single = barycenter_oracle(one(p), theta, 5000, 1);
  for (std::size_t chunks : {2u, 3u, 7u, 64u}) CHECK(barycenter_oracle(one(p), theta, 5000, chunks) == single);
  Enclosure coarse = barycenter_oracle(one(p), theta, 1000, 4);
  CHECK(single.width() < coarse.width());
  CHECK(single.overlaps(coarse));
}

TEST_CASE("law of the lever") {
  Precision p(64);
  SegmentGeometry g = segment(one(p), pi_part(1, 2, p));
  BalanceReport report = balance_check(g);
  CHECK(report.truth == Truth::holds);
  CHECK(report.residual.width() < Dyadic(mpz_class(1), -33));
  for (const char* t : {"2.8", "0.2"}) CHECK(balance_check(segment(one(p), num(t, p))).truth == Truth::holds);
}

TEST_CASE("barycentric equation") {
  RatioReport quarter = barycentric_equation_ratio(segment(one(), pi_part(1, 2)));
  CHECK(quarter.agree);
  CHECK(truncates_to(quarter.ratio, "1.37802423350"));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> angle(2, 3141);
  for (int i = 0; i < 50; ++i) {
    RatioReport rr = barycentric_equation_ratio(segment(one(), Enclosure::point(Rational(angle(rng), 1000), kP)));
    CHECK(rr.agree);
    CHECK(strictly_greater(rr.ratio, Enclosure::point(Rational(4, 3), kP)) == Truth::holds);
  }
  Enclosure near_pi = pi_reference(kP) - num("0.000001");
  Enclosure ratio = barycentric_equation_ratio(segment(one(), near_pi)).ratio;
  CHECK((ratio - pi_part(1, 2)).magnitude() < Dyadic(mpz_class(1), -16));
}

TEST_CASE("segment inequalities") {
  for (const char* t : {"1.5707963", "3.0", "0.05", "2.0"}) {
    CAPTURE(t);
    for (const Verdict& v : segment_inequality_suite(segment(one(), num(t)))) {
      CAPTURE(v.name);
      CHECK(v.truth == Truth::holds);
    }
  }
  Verdict hex = lemma_vi(6, kP);
  CHECK(hex.truth == Truth::holds);
  PolygonRung r = trig_rung(6, kP);
  Enclosure margin = Rational(2, 3) * r.circ_area + r.insc_area / 3 - pi_reference(kP);
  CHECK(margin.lo().to_rational() > Rational(1, 100));
  for (long n : {12L, 96L, 1536L}) CHECK(lemma_vi(n, kP).truth == Truth::holds);
}

TEST_CASE("pinching of the barycenter") {
  for (const char* t : {"0.01", "0.05", "0.2"}) {
    SegmentGeometry g = segment(one(), num(t));
    Enclosure three_fifths = Rational(3, 5) * g.a;
    Enclosure schuh = three_fifths - 3 * g.a.square() / (25 * (1 - three_fifths));
    Enclosure schuh_gap = g.xi - schuh, hofmann_gap = g.xi - g.a.scaled(-1);
    CHECK(schuh_gap.positive());
    CHECK((three_fifths - g.xi).positive());
    CHECK(schuh_gap.hi() < hofmann_gap.lo());
  }
}

TEST_CASE("homogeneity") {
  Enclosure theta = num("1.3");
  SegmentGeometry unit = segment(one(), theta), big = segment(Enclosure::point(3, kP), theta);
  CHECK(big.a.overlaps(3 * unit.a));
  CHECK(big.b.overlaps(3 * unit.b));
  CHECK(big.xi.overlaps(3 * unit.xi));
  CHECK(big.sigma.overlaps(9 * unit.sigma));
  CHECK(big.delta.overlaps(9 * unit.delta));
  CHECK(big.tangent->overlaps(9 * *unit.tangent));
}
