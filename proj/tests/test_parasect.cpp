#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circulus/barycenter.hpp"
#include "circulus/parasect.hpp"
#include "support.hpp"

using namespace circulus;
using support::truncates_to;

namespace {

const Precision kP(64);

Enclosure num(const char* text, Precision p = kP) { return Enclosure::point(Rational::parse(text), p); }
Enclosure whole(long n, Precision p = kP) { return Enclosure::point(n, p); }

}  // namespace

TEST_CASE("configuration") {
  ParabolaCircleConfig semi = configure(whole(1), whole(1));
  CHECK(semi.a_half.contains(Rational(1)));
  CHECK(truncates_to(semi.c, "1.18321595"));
  CHECK(truncates_to(semi.p, "0.91651513"));
  ParabolaCircleConfig half = configure(whole(1), num("0.5"));
  CHECK(half.p.hi() < half.a_half.lo());
  CHECK(half.a_half.hi() < half.c.lo());
  ParabolaCircleConfig shallow = configure(whole(1), num("0.000001", Precision(128)));
  Enclosure ratio = shallow.p / shallow.a_half;
  CHECK((ratio - enc_sqrt(num("0.6", Precision(128)))).magnitude() < Dyadic(mpz_class(1), -18));
  CHECK(((half.a_half.square() + (half.r - half.b).square()) - half.r.square()).contains_zero());
  CHECK_THROWS_AS(configure(whole(1), num("1.5")), DomainError);
  CHECK_THROWS_AS(configure(whole(1), num("0")), DomainError);
}

TEST_CASE("segment areas") {
  ParabolaCircleConfig semi = configure(whole(1), whole(1));
  CHECK(truncates_to(parabolic_segment_area(semi), "1.57762127"));
  CHECK(circular_segment_area(semi).overlaps(pi_reference(kP).scaled(-1)));
  ParabolaCircleConfig half = configure(whole(1), num("0.5"));
  CHECK(truncates_to(circular_segment_area(half), "0.61418484930437"));
  CHECK(truncates_to(parabolic_segment_area(half), "0.61463629715285"));
  ParabolaCircleConfig scaled = configure(whole(3), num("1.5"));
  CHECK(parabolic_segment_area(scaled).overlaps(9 * parabolic_segment_area(half)));
}

TEST_CASE("circular area matches the segment module") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> angle(10, 3141);
  for (int i = 0; i < 30; ++i) {
    Enclosure r = whole(1 + i % 3);
    Enclosure theta = Enclosure::point(Rational(angle(rng), 1000), kP);
    SegmentGeometry g = segment(r, theta);
    CHECK(circular_segment_area(configure(r, g.a)).overlaps(g.sigma));
  }
}

TEST_CASE("f values") {
  Enclosure f1 = f_of_x(whole(1));
  CHECK(f1.overlaps(pi_reference(kP).scaled(-2) - 2 * enc_sqrt(whole(35)) / 15));
  CHECK(truncates_to(f1, "-0.0034124743491"));
  CHECK(truncates_to(f_of_x(num("0.5")), "-0.00022572392424"));
  CHECK(truncates_to(f_of_x(num("0.3")), "-0.000034205522217"));
  Enclosure tiny = f_of_x(num("0.000001", Precision(128)));
  CHECK(tiny.magnitude() < Dyadic(mpz_class(1), -60));
  CHECK_THROWS_AS(f_of_x(whole(0)), DomainError);
  CHECK_THROWS_AS(f_of_x(num("1.01")), DomainError);
}

TEST_CASE("f is negative and decreasing on a grid") {
  Enclosure previous = f_of_x(num("0.001"));
  CHECK(previous.negative());
  for (int i = 1; i <= 200; ++i) {
    Enclosure x = Enclosure::point(Rational(i, 200), kP);
    Enclosure f = f_of_x(x);
    CAPTURE(i);
    CHECK(strictly_less(f, whole(0)) == Truth::holds);
    CHECK(f.hi() < previous.lo());
    previous = f;
  }
}

TEST_CASE("area difference report") {
  AreaDifferenceReport semi = area_difference_report(configure(whole(1), whole(1)));
  CHECK(truncates_to(semi.sliver_minus_wedge, "-0.0034124743"));
  CHECK(semi.bound_check == Truth::holds);
  AreaDifferenceReport doubled = area_difference_report(configure(whole(2), whole(2)));
  CHECK(doubled.sliver_minus_wedge.overlaps(4 * semi.sliver_minus_wedge));
  CHECK(doubled.bound_check == Truth::holds);
  AreaDifferenceReport shallow = area_difference_report(configure(whole(1), num("0.3")));
  CHECK(shallow.sliver_minus_wedge.negative());
  CHECK(shallow.sliver_minus_wedge.lo() > Dyadic(mpz_class(-1), -13));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> num_r(1, 50), frac(1, 1000);
  for (int i = 0; i < 40; ++i) {
    Enclosure r = Enclosure::point(Rational(num_r(rng), 7), kP);
    Enclosure b = r * Enclosure::point(Rational(frac(rng), 1000), kP);
    ParabolaCircleConfig cfg = configure(r, b);
    AreaDifferenceReport rep = area_difference_report(cfg);
    CHECK(rep.bound_check == Truth::holds);
    Enclosure difference = circular_segment_area(cfg) - parabolic_segment_area(cfg);
    CHECK(difference.overlaps(2 * rep.sliver_minus_wedge));
  }
}

TEST_CASE("derivative identity") {
  std::mt19937_64 rng(50);
  std::uniform_int_distribution<long> n(-100000, 100000), d(1, 100000);
  for (int i = 0; i < 50; ++i) CHECK(derivative_identity(Rational(n(rng), d(rng))));
  CHECK(derivative_identity(Rational(0)));
}
