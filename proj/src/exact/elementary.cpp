#include "circulus/elementary.hpp"

#include <algorithm>

#include "circulus/errors.hpp"

namespace circulus {

namespace {

// Extra bits carried through series evaluation before the final rounding.
constexpr unsigned kGuardBits = 32;

Enclosure at(const Dyadic& x, Precision p) { return Enclosure(x, x, p); }

// [-m, m] for a nonnegative dyadic bound m.
Enclosure symmetric(const Dyadic& m, Precision p) { return Enclosure(-m, m, p); }

mpz_class floor_of(const Dyadic& x) {
  if (x.exponent() >= 0) {
    mpz_class out;
    mpz_mul_2exp(out.get_mpz_t(), x.mantissa().get_mpz_t(), static_cast<unsigned long>(x.exponent()));
    return out;
  }
  mpz_class out;
  mpz_fdiv_q_2exp(out.get_mpz_t(), x.mantissa().get_mpz_t(), static_cast<unsigned long>(-x.exponent()));
  return out;
}

// Series are truncated once the next term is below this absolute size.
Dyadic tolerance(Precision w, long relative_to = 0) {
  return Dyadic(mpz_class(1), relative_to - static_cast<long>(w.bits()) - 4);
}

// sin r for |r| <= 1: sum of (-1)^k r^(2k+1)/(2k+1)!, remainder bounded by
// the first omitted term.
Enclosure sin_series(const Enclosure& r) {
  Precision w = r.precision();
  if (r.is_point() && r.lo().is_zero()) return r;
  Dyadic mag = r.magnitude();
  Dyadic tol = tolerance(w, mag.is_zero() ? 0 : mag.magnitude());
  Enclosure r2 = r.square();
  Enclosure term = r;
  Enclosure sum = r;
  for (long k = 1;; ++k) {
    term = -(term * r2) / ((2 * k) * (2 * k + 1));
    if (term.magnitude() < tol) return sum + symmetric(term.magnitude(), w);
    sum = sum + term;
  }
}

// cos r for |r| <= 1.
Enclosure cos_series(const Enclosure& r) {
  Precision w = r.precision();
  Dyadic tol = tolerance(w, -1);
  Enclosure r2 = r.square();
  Enclosure term = Enclosure::point(1, w);
  Enclosure sum = term;
  for (long k = 1;; ++k) {
    term = -(term * r2) / ((2 * k - 1) * (2 * k));
    if (term.magnitude() < tol) return sum + symmetric(term.magnitude(), w);
    sum = sum + term;
  }
}

// atan t for |t| < 1: alternating series with decreasing terms.
Enclosure atan_series(const Enclosure& t) {
  Precision w = t.precision();
  Dyadic mag = t.magnitude();
  if (mag.is_zero()) return t;
  Dyadic tol = tolerance(w, mag.magnitude());
  Enclosure t2 = t.square();
  Enclosure power = t;
  Enclosure sum = t;
  for (long k = 1;; ++k) {
    power = -(power * t2);
    Enclosure term = power / (2 * k + 1);
    if (term.magnitude() < tol) return sum + symmetric(term.magnitude(), w);
    sum = sum + term;
  }
}

Enclosure machin_pi(Precision w) {
  Enclosure fifth = Enclosure::point(Rational(1, 5), w);
  Enclosure inv239 = Enclosure::point(Rational(1, 239), w);
  return 16 * atan_series(fifth) - 4 * atan_series(inv239);
}

// atan of an enclosure with 0 <= lo, evaluated at working precision.
Enclosure atan_nonnegative(Enclosure t) {
  Precision w = t.precision();
  if (t.hi().is_zero()) return t;
  // Large arguments: atan t = pi/2 - atan(1/t).
  if (t.lo() > Dyadic(1)) return machin_pi(w).scaled(-1) - atan_nonnegative(1 / t);
  // Halve the angle until the series converges quickly: atan t = 2 atan(t / (1 + sqrt(1 + t^2))).
  const Dyadic limit(mpz_class(17560), -16);  // 0.26794..., just below 2 - sqrt(3)
  long doublings = 0;
  while (t.hi() > limit) {
    t = t / (1 + enc_sqrt(1 + t.square()));
    ++doublings;
  }
  return atan_series(t).scaled(doublings);
}

Enclosure atan_point(const Dyadic& q, Precision w) {
  Enclosure t = at(q.abs(), w);
  Enclosure out = atan_nonnegative(t);
  return q.sign() < 0 ? -out : out;
}

Enclosure asin_point(const Dyadic& q, Precision w) {
  if (q.abs() > Dyadic(1)) throw DomainError("arcsin argument outside [-1, 1]");
  if (q.abs() == Dyadic(1)) {
    Enclosure half_pi = machin_pi(w).scaled(-1);
    return q.sign() < 0 ? -half_pi : half_pi;
  }
  Enclosure x = at(q.abs(), w);
  Enclosure u = x / enc_sqrt(1 - x.square());
  Enclosure out = Enclosure::hull(atan_nonnegative(at(u.lo(), w)), atan_nonnegative(at(u.hi(), w)));
  return q.sign() < 0 ? -out : out;
}

// sin (quadrant 0) or cos (quadrant 1) of a dyadic point, at working precision.
Enclosure sin_cos_point(const Dyadic& m, Precision w, int shift) {
  long mag = m.is_zero() ? 0 : std::max(0L, m.magnitude() + 2);
  Precision wide = w.plus(static_cast<unsigned>(mag) + 8);
  Enclosure half_pi = machin_pi(wide).scaled(-1);
  Enclosure x = at(m, wide);
  mpz_class k = floor_of((x / half_pi).mid() + Dyadic(mpz_class(1), -1));
  Enclosure r = (x - Enclosure(Dyadic(k, 0), Dyadic(k, 0), wide) * half_pi).with_precision(w);
  unsigned long quadrant = (mpz_fdiv_ui(k.get_mpz_t(), 4) + static_cast<unsigned long>(shift)) % 4;
  switch (quadrant) {
    case 0:
      return sin_series(r);
    case 1:
      return cos_series(r);
    case 2:
      return -sin_series(r);
    default:
      return -cos_series(r);
  }
}

Enclosure clamp_unit(const Enclosure& e, Precision p) {
  Dyadic lo = std::max(e.lo(), Dyadic(-1));
  Dyadic hi = std::min(e.hi(), Dyadic(1));
  return Enclosure(lo, hi, p);
}

// sin/cos over an interval by the mean value form f(mid) +- rad.
Enclosure sin_cos(const Enclosure& x, int shift) {
  Precision p = x.precision();
  Precision w = p.plus(kGuardBits);
  Enclosure centre = sin_cos_point(x.mid(), w, shift);
  Dyadic rad = x.width().scaled(-1);
  return clamp_unit(centre + symmetric(rad, w), p);
}

}  // namespace

Enclosure enc_sqrt(const Enclosure& a) {
  if (a.lo().sign() < 0) throw NegativeRadicand();
  auto bits = a.precision().bits();
  return Enclosure(square_root(a.lo(), bits, Round::down), square_root(a.hi(), bits, Round::up), a.precision());
}

Enclosure sin(const Enclosure& x) { return sin_cos(x, 0); }

Enclosure cos(const Enclosure& x) { return sin_cos(x, 1); }

Enclosure tan(const Enclosure& x) {
  Precision p = x.precision();
  Enclosure wide = x.with_precision(p.plus(kGuardBits));
  Enclosure c = cos(wide);
  if (c.contains_zero()) throw PoleProximity();
  return (sin(wide) / c).with_precision(p);
}

Enclosure atan(const Enclosure& x) {
  Precision p = x.precision();
  Precision w = p.plus(kGuardBits);
  return Enclosure(atan_point(x.lo(), w).lo(), atan_point(x.hi(), w).hi(), p);
}

Enclosure asin(const Enclosure& x) {
  if (x.lo() < Dyadic(-1) || x.hi() > Dyadic(1)) throw DomainError("arcsin argument outside [-1, 1]");
  Precision p = x.precision();
  Precision w = p.plus(kGuardBits);
  return Enclosure(asin_point(x.lo(), w).lo(), asin_point(x.hi(), w).hi(), p);
}

Enclosure enc_trig(const Enclosure& x, TrigFn fn) {
  switch (fn) {
    case TrigFn::sin:
      return sin(x);
    case TrigFn::cos:
      return cos(x);
    case TrigFn::tan:
      return tan(x);
    case TrigFn::arcsin:
      return asin(x);
    case TrigFn::arctan:
      return atan(x);
  }
  throw DomainError("unknown trigonometric function");
}

Enclosure pi_reference(Precision p) { return machin_pi(p.plus(24)).with_precision(p); }

}  // namespace circulus
