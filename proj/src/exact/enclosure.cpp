#include "circulus/enclosure.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "circulus/errors.hpp"

namespace circulus {

Precision::Precision(unsigned bits) : bits_(bits) {
  if (bits < kMinBits) throw DomainError("precision must be at least 8 bits");
}

Precision Precision::for_digits(int digits) {
  if (digits < 1) throw DomainError("digits must be positive");
  return Precision(static_cast<unsigned>(std::ceil(3.33 * digits)) + 32);
}

Enclosure::Enclosure(const Dyadic& lo, const Dyadic& hi, Precision p)
    : lo_(round(lo, p.bits(), Round::down)), hi_(round(hi, p.bits(), Round::up)), precision_(p) {
  if (lo > hi) throw DomainError("enclosure with lo > hi");
}

Enclosure::Enclosure(const Rational& lo, const Rational& hi, Precision p)
    : lo_(round(lo, p.bits(), Round::down)), hi_(round(hi, p.bits(), Round::up)), precision_(p) {
  if (lo > hi) throw DomainError("enclosure with lo > hi");
}

Enclosure Enclosure::point(const Rational& value, Precision p) { return Enclosure(value, value, p); }

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  return Enclosure(Exact{}, std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_), coarser(a.precision_, b.precision_))
      .with_precision(coarser(a.precision_, b.precision_));
}

Dyadic Enclosure::magnitude() const { return std::max(lo_.abs(), hi_.abs()); }

Dyadic Enclosure::mignitude() const {
  if (contains_zero()) return Dyadic();
  return std::min(lo_.abs(), hi_.abs());
}

bool Enclosure::contains(const Rational& x) const { return lo_.to_rational() <= x && x <= hi_.to_rational(); }

Enclosure Enclosure::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  return Enclosure(Exact{}, Dyadic(), magnitude(), precision_);
}

Enclosure Enclosure::square() const {
  auto b = precision_.bits();
  if (contains_zero()) {
    Dyadic m = magnitude();
    return Enclosure(Exact{}, Dyadic(), round(m * m, b, Round::up), precision_);
  }
  Dyadic small = mignitude(), big = magnitude();
  return Enclosure(Exact{}, round(small * small, b, Round::down), round(big * big, b, Round::up), precision_);
}

Enclosure Enclosure::intersect(const Enclosure& other) const {
  if (!overlaps(other)) throw DomainError("intersection of disjoint enclosures");
  Precision p = coarser(precision_, other.precision_);
  return Enclosure(std::max(lo_, other.lo_), std::min(hi_, other.hi_), p);
}

Enclosure Enclosure::operator-() const { return Enclosure(Exact{}, -hi_, -lo_, precision_); }

Enclosure Enclosure::scaled(long power_of_two) const {
  return Enclosure(Exact{}, lo_.scaled(power_of_two), hi_.scaled(power_of_two), precision_);
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  Precision p = coarser(a.precision_, b.precision_);
  return Enclosure(Enclosure::Exact{}, round(a.lo_ + b.lo_, p.bits(), Round::down),
                   round(a.hi_ + b.hi_, p.bits(), Round::up), p);
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  Precision p = coarser(a.precision_, b.precision_);
  return Enclosure(Enclosure::Exact{}, round(a.lo_ - b.hi_, p.bits(), Round::down),
                   round(a.hi_ - b.lo_, p.bits(), Round::up), p);
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  Precision p = coarser(a.precision_, b.precision_);
  auto bits = p.bits();
  if (a.lo_.sign() >= 0 && b.lo_.sign() >= 0) {
    return Enclosure(Enclosure::Exact{}, round(a.lo_ * b.lo_, bits, Round::down),
                     round(a.hi_ * b.hi_, bits, Round::up), p);
  }
  std::array<Dyadic, 4> products{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  auto [lo, hi] = std::minmax_element(products.begin(), products.end());
  return Enclosure(Enclosure::Exact{}, round(*lo, bits, Round::down), round(*hi, bits, Round::up), p);
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.contains_zero()) throw DivisionByIntervalContainingZero();
  Precision p = coarser(a.precision_, b.precision_);
  auto bits = p.bits();
  // Endpoint pairs attaining the extremes depend only on the signs.
  const Dyadic *lo_num, *lo_den, *hi_num, *hi_den;
  if (b.lo_.sign() > 0) {
    lo_num = &a.lo_;
    lo_den = a.lo_.sign() >= 0 ? &b.hi_ : &b.lo_;
    hi_num = &a.hi_;
    hi_den = a.hi_.sign() >= 0 ? &b.lo_ : &b.hi_;
  } else {
    lo_num = &a.hi_;
    lo_den = a.hi_.sign() >= 0 ? &b.hi_ : &b.lo_;
    hi_num = &a.lo_;
    hi_den = a.lo_.sign() >= 0 ? &b.lo_ : &b.hi_;
  }
  return Enclosure(Enclosure::Exact{}, divide(*lo_num, *lo_den, bits, Round::down),
                   divide(*hi_num, *hi_den, bits, Round::up), p);
}

Enclosure enc_arith(const Enclosure& a, const Enclosure& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return a + b;
    case ArithKind::sub:
      return a - b;
    case ArithKind::mul:
      return a * b;
    case ArithKind::div:
      return a / b;
  }
  throw DomainError("unknown arithmetic kind");
}

}  // namespace circulus
