#include "circulus/dyadic.hpp"

#include <algorithm>
#include <cmath>

#include "circulus/errors.hpp"

namespace circulus {

namespace {

unsigned long bits_of(const mpz_class& m) { return m == 0 ? 0 : mpz_sizeinbase(m.get_mpz_t(), 2); }

mpz_class shifted_left(const mpz_class& m, unsigned long s) {
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), m.get_mpz_t(), s);
  return out;
}

mpz_class shifted_right(const mpz_class& m, unsigned long s, Round dir) {
  mpz_class out;
  if (dir == Round::down)
    mpz_fdiv_q_2exp(out.get_mpz_t(), m.get_mpz_t(), s);
  else
    mpz_cdiv_q_2exp(out.get_mpz_t(), m.get_mpz_t(), s);
  return out;
}

mpz_class quotient(const mpz_class& n, const mpz_class& d, Round dir) {
  mpz_class out;
  if (dir == Round::down)
    mpz_fdiv_q(out.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  else
    mpz_cdiv_q(out.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return out;
}

mpz_class pow10(long n) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(n));
  return out;
}

}  // namespace

Dyadic::Dyadic(long value) : mantissa_(value) { normalize(); }

Dyadic::Dyadic(mpz_class mantissa, long exponent) : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  auto zeros = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (zeros > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), zeros);
    exponent_ += static_cast<long>(zeros);
  }
}

unsigned long Dyadic::bit_length() const { return bits_of(mantissa_); }

long Dyadic::magnitude() const { return exponent_ + static_cast<long>(bit_length()) - 1; }

Rational Dyadic::to_rational() const {
  if (exponent_ >= 0) return Rational(shifted_left(mantissa_, exponent_), mpz_class(1));
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(-exponent_));
  return Rational(mantissa_, den);
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  long exp = 0;
  double m = mpz_get_d_2exp(&exp, mantissa_.get_mpz_t());
  return std::ldexp(m, static_cast<int>(std::clamp(exp + exponent_, -100000L, 100000L)));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long e = std::min(a.exponent_, b.exponent_);
  mpz_class sum = shifted_left(a.mantissa_, a.exponent_ - e) + shifted_left(b.mantissa_, b.exponent_ - e);
  return Dyadic(std::move(sum), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Same sign: compare magnitudes first, then align.
  long ma = a.magnitude(), mb = b.magnitude();
  if (ma != mb) return sa > 0 ? (ma <=> mb) : (mb <=> ma);
  long e = std::min(a.exponent_, b.exponent_);
  int c = cmp(shifted_left(a.mantissa_, a.exponent_ - e), shifted_left(b.mantissa_, b.exponent_ - e));
  return c <=> 0;
}

Dyadic round(const Dyadic& x, unsigned bits, Round dir) {
  auto len = x.bit_length();
  if (len <= bits) return x;
  auto shift = len - bits;
  return Dyadic(shifted_right(x.mantissa(), shift, dir), x.exponent() + static_cast<long>(shift));
}

Dyadic round(const Rational& x, unsigned bits, Round dir) {
  if (x.sign() == 0) return Dyadic();
  const mpz_class& num = x.numerator();
  const mpz_class& den = x.denominator();
  // Scale so the integer quotient carries at least bits + 1 significant bits.
  long s = static_cast<long>(bits) + 1 + static_cast<long>(bits_of(den)) - static_cast<long>(bits_of(num));
  mpz_class n = s > 0 ? shifted_left(num, s) : num;
  mpz_class d = s < 0 ? shifted_left(den, -s) : den;
  return round(Dyadic(quotient(n, d, dir), -s), bits, dir);
}

Dyadic divide(const Dyadic& a, const Dyadic& b, unsigned bits, Round dir) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.is_zero()) return Dyadic();
  long s = static_cast<long>(bits) + 1 + static_cast<long>(b.bit_length()) - static_cast<long>(a.bit_length());
  mpz_class n = s > 0 ? shifted_left(a.mantissa(), s) : a.mantissa();
  mpz_class d = s < 0 ? shifted_left(b.mantissa(), -s) : b.mantissa();
  return round(Dyadic(quotient(n, d, dir), a.exponent() - b.exponent() - s), bits, dir);
}

Dyadic square_root(const Dyadic& x, unsigned bits, Round dir) {
  if (x.sign() < 0) throw NegativeRadicand();
  if (x.is_zero()) return Dyadic();
  mpz_class m = x.mantissa();
  long e = x.exponent();
  if (e % 2 != 0) {
    m = shifted_left(m, 1);
    e -= 1;
  }
  // Scale by 4^t so the integer root carries at least bits + 1 bits.
  long t = std::max(0L, static_cast<long>(bits) + 2 - static_cast<long>(bits_of(m)) / 2);
  mpz_class scaled = shifted_left(m, 2 * t);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  if (dir == Round::up && root * root != scaled) root += 1;
  return round(Dyadic(std::move(root), e / 2 - t), bits, dir);
}

Dyadic ulp(const Dyadic& x, unsigned bits) {
  if (x.is_zero()) return Dyadic(mpz_class(1), -static_cast<long>(bits));
  return Dyadic(mpz_class(1), x.magnitude() - static_cast<long>(bits) + 1);
}

std::string to_decimal(const Dyadic& x, int decimals, Round dir) {
  // floor/ceil(x * 10^decimals) as an integer, then place the decimal point.
  mpz_class scaled = x.mantissa() * pow10(decimals);
  mpz_class q = x.exponent() >= 0 ? shifted_left(scaled, x.exponent())
                                  : shifted_right(scaled, static_cast<unsigned long>(-x.exponent()), dir);
  bool negative = q < 0;
  if (negative) q = -q;
  std::string digits = q.get_str();
  if (decimals > 0) {
    if (static_cast<int>(digits.size()) <= decimals)
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  }
  return negative ? "-" + digits : digits;
}

std::string to_exact_decimal(const Dyadic& x) {
  int decimals = x.exponent() < 0 ? static_cast<int>(-x.exponent()) : 0;
  return to_decimal(x, decimals, Round::down);
}

}  // namespace circulus
