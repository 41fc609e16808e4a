#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

#include "circulus/rational.hpp"

namespace circulus {

/// Rounding direction for directed rounding: toward -inf or +inf.
enum class Round { down, up };

inline Round opposite(Round r) { return r == Round::down ? Round::up : Round::down; }

/// Exact binary fraction mantissa * 2^exponent. Kept canonical (odd mantissa,
/// or zero with exponent 0) so equal values compare structurally.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value);  // NOLINT(google-explicit-constructor)
  Dyadic(mpz_class mantissa, long exponent);

  const mpz_class& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }

  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return sign() == 0; }

  /// floor(log2 |x|); undefined for zero.
  long magnitude() const;
  /// Number of significant bits in the mantissa.
  unsigned long bit_length() const;

  Rational to_rational() const;
  operator Rational() const { return to_rational(); }  // NOLINT(google-explicit-constructor)
  double to_double() const;

  Dyadic operator-() const { return Dyadic(-mantissa_, exponent_); }
  Dyadic abs() const { return sign() < 0 ? -*this : *this; }
  Dyadic scaled(long power_of_two) const { return Dyadic(mantissa_, exponent_ + power_of_two); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  mpz_class mantissa_{0};
  long exponent_ = 0;
};

/// Round to at most `bits` significant bits in the given direction.
Dyadic round(const Dyadic& x, unsigned bits, Round dir);
/// Round an exact rational to at most `bits` significant bits.
Dyadic round(const Rational& x, unsigned bits, Round dir);
/// Directed quotient a / b with `bits` significant bits; b != 0.
Dyadic divide(const Dyadic& a, const Dyadic& b, unsigned bits, Round dir);
/// Directed square root with `bits` significant bits; x >= 0. Uses integer
/// square roots of the scaled mantissa.
Dyadic square_root(const Dyadic& x, unsigned bits, Round dir);

/// Smallest power of two that is an ulp of |x| at `bits` precision.
Dyadic ulp(const Dyadic& x, unsigned bits);

/// Decimal string of x rounded to `decimals` places after the point.
std::string to_decimal(const Dyadic& x, int decimals, Round dir);
/// Exact decimal expansion (finite for every dyadic).
std::string to_exact_decimal(const Dyadic& x);

}  // namespace circulus
