#include "circulus/parasect.hpp"

#include "circulus/elementary.hpp"
#include "circulus/errors.hpp"

namespace circulus {

namespace {

constexpr unsigned kGuard = 16;

Enclosure sqrt5(Precision p) { return enc_sqrt(Enclosure::point(5, p)); }

}  // namespace

ParabolaCircleConfig configure(const Enclosure& r, const Enclosure& b) {
  if (!r.positive() || !b.positive()) throw DomainError("radius and height must be positive");
  if (b.lo() > r.hi()) throw DomainError("segment height must not exceed the radius");
  Precision prec = coarser(r.precision(), b.precision());
  Precision w = prec.plus(kGuard);
  Enclosure rw = r.with_precision(w), bw = b.with_precision(w);
  Enclosure b2 = bw.square();
  Enclosure a2 = 2 * rw * bw - b2;
  Enclosure a_half = enc_sqrt(a2);
  Enclosure p = enc_sqrt(Enclosure::point(3, w)) / 5 * enc_sqrt(5 * a2 + 2 * b2);
  Enclosure c = enc_sqrt(10 * rw * bw - 3 * b2) / sqrt5(w);
  return ParabolaCircleConfig{r.with_precision(prec), b.with_precision(prec), a_half.with_precision(prec),
                              p.with_precision(prec), c.with_precision(prec)};
}

Enclosure parabolic_segment_area(const ParabolaCircleConfig& cfg) {
  Precision prec = cfg.r.precision();
  Precision w = prec.plus(kGuard);
  Enclosure r = cfg.r.with_precision(w), b = cfg.b.with_precision(w);
  Enclosure area = 4 * b / (3 * sqrt5(w)) * enc_sqrt(10 * r * b - 3 * b.square());
  return area.with_precision(prec);
}

Enclosure circular_segment_area(const ParabolaCircleConfig& cfg) {
  Precision prec = cfg.r.precision();
  Precision w = prec.plus(kGuard);
  Enclosure r = cfg.r.with_precision(w), b = cfg.b.with_precision(w);
  Enclosure r2 = r.square();
  Enclosure area = pi_reference(w) * r2 / 2 - r2 * asin((r - b) / r) - (r - b) * enc_sqrt(2 * r * b - b.square());
  return area.with_precision(prec);
}

Enclosure f_of_x(const Enclosure& x) {
  if (!x.positive() || x.lo() > Dyadic(1)) throw DomainError("f is defined for 0 < x <= 1");
  Precision prec = x.precision();
  Precision w = prec.plus(kGuard);
  Enclosure xw = x.with_precision(w);
  Enclosure x2 = xw.square();
  Enclosure one_minus = 1 - xw;
  Enclosure value = pi_reference(w).scaled(-2) - asin(one_minus).scaled(-1) -
                    (one_minus * enc_sqrt(2 * xw - x2)).scaled(-1) -
                    2 * xw / (3 * sqrt5(w)) * enc_sqrt(10 * xw - 3 * x2);
  return value.with_precision(prec);
}

AreaDifferenceReport area_difference_report(const ParabolaCircleConfig& cfg) {
  Precision prec = cfg.r.precision();
  Precision w = prec.plus(kGuard);
  Enclosure r = cfg.r.with_precision(w);
  Enclosure r2 = r.square();
  Enclosure value = f_of_x(cfg.b.with_precision(w) / r) * r2;
  Enclosure magnitude = value.abs();
  Enclosure f1 = 2 * enc_sqrt(Enclosure::point(35, w)) / 15 - pi_reference(w).scaled(-2);
  Enclosure exact_limit = r2 * f1 * Enclosure::point(Rational(1000001, 1000000), w);
  Enclosure relaxed_limit = r2 / 290;
  Truth below_f1 = strictly_less(magnitude, exact_limit);
  Truth below_290th = strictly_less(magnitude, relaxed_limit);
  return AreaDifferenceReport{value.with_precision(prec), below_f1, below_290th, both(below_f1, below_290th)};
}

bool derivative_identity(const Rational& x) {
  Rational lhs = (Rational(10) - Rational(4) * x) * (Rational(10) - Rational(4) * x) -
                 Rational(5) * (Rational(2) - x) * (Rational(10) - Rational(3) * x);
  return lhs == x * x;
}

}  // namespace circulus
