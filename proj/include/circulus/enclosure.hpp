#pragma once

#include <string>

#include "circulus/dyadic.hpp"
#include "circulus/rational.hpp"

namespace circulus {

/// Count of significant binary digits kept in enclosure endpoints.
class Precision {
 public:
  static constexpr unsigned kMinBits = 8;

  explicit Precision(unsigned bits);

  /// Working precision for `digits` requested decimal digits:
  /// ceil(3.33 * digits) + 32 guard bits.
  static Precision for_digits(int digits);

  unsigned bits() const { return bits_; }
  Precision plus(unsigned extra) const { return Precision(bits_ + extra); }

  friend bool operator==(Precision, Precision) = default;
  friend auto operator<=>(Precision, Precision) = default;

 private:
  unsigned bits_;
};

inline Precision coarser(Precision a, Precision b) { return a.bits() < b.bits() ? a : b; }

/// Closed interval [lo, hi] with dyadic endpoints that is guaranteed to
/// contain the exact value it stands for. Every operation rounds outward.
class Enclosure {
 public:
  /// Rounds lo down and hi up to `p`; throws DomainError if lo > hi.
  Enclosure(const Dyadic& lo, const Dyadic& hi, Precision p);
  Enclosure(const Rational& lo, const Rational& hi, Precision p);

  /// Tightest enclosure of an exact value at precision p.
  static Enclosure point(const Rational& value, Precision p);
  static Enclosure point(long value, Precision p) { return point(Rational(value), p); }
  static Enclosure hull(const Enclosure& a, const Enclosure& b);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  Precision precision() const { return precision_; }

  Dyadic width() const { return hi_ - lo_; }
  /// Exact midpoint (lo + hi) / 2.
  Dyadic mid() const { return (lo_ + hi_).scaled(-1); }
  /// max(|lo|, |hi|)
  Dyadic magnitude() const;
  /// min |x| over the enclosure (zero if it straddles zero).
  Dyadic mignitude() const;

  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const;
  bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Enclosure& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool overlaps(const Enclosure& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
  /// Certainly positive / negative.
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }

  Enclosure with_precision(Precision p) const { return Enclosure(lo_, hi_, p); }
  Enclosure abs() const;
  Enclosure square() const;
  /// Intersection; throws DomainError when disjoint.
  Enclosure intersect(const Enclosure& other) const;

  Enclosure operator-() const;
  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  /// Throws DivisionByIntervalContainingZero when 0 is in b.
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);

  friend Enclosure operator+(const Enclosure& a, long b) { return a + point(b, a.precision_); }
  friend Enclosure operator+(long a, const Enclosure& b) { return b + a; }
  friend Enclosure operator-(const Enclosure& a, long b) { return a + point(-b, a.precision_); }
  friend Enclosure operator-(long a, const Enclosure& b) { return point(a, b.precision_) - b; }
  friend Enclosure operator*(long a, const Enclosure& b) { return point(a, b.precision_) * b; }
  friend Enclosure operator*(const Enclosure& a, long b) { return b * a; }
  friend Enclosure operator/(const Enclosure& a, long b) { return a / point(b, a.precision_); }
  friend Enclosure operator/(long a, const Enclosure& b) { return point(a, b.precision_) / b; }
  friend Enclosure operator*(const Rational& a, const Enclosure& b) { return point(a, b.precision_) * b; }
  friend Enclosure operator*(const Enclosure& a, const Rational& b) { return b * a; }

  /// Multiplication by 2^k, exact.
  Enclosure scaled(long power_of_two) const;

  friend bool operator==(const Enclosure& a, const Enclosure& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.precision_ == b.precision_;
  }

 private:
  struct Exact {};
  Enclosure(Exact, Dyadic lo, Dyadic hi, Precision p) : lo_(std::move(lo)), hi_(std::move(hi)), precision_(p) {}

  Dyadic lo_;
  Dyadic hi_;
  Precision precision_;
};

enum class ArithKind { add, sub, mul, div };

/// Named form of the four interval operations.
Enclosure enc_arith(const Enclosure& a, const Enclosure& b, ArithKind kind);

}  // namespace circulus
