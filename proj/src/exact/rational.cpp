#include "circulus/rational.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "circulus/errors.hpp"

namespace circulus {

Rational::Rational(long value) : value_(value) {}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

// Unsigned decimal "123", "1.25", ".5" -> exact value.
Rational parse_decimal(std::string_view s) {
  auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) throw DomainError("malformed number");
  if (!int_part.empty() && !all_digits(int_part)) throw DomainError("malformed number");
  if (!frac_part.empty() && !all_digits(frac_part)) throw DomainError("malformed number");
  std::string digits = std::string(int_part) + std::string(frac_part);
  if (digits.empty()) digits = "0";
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
  return Rational(num, den);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse(text.substr(0, slash));
    Rational den = parse(text.substr(slash + 1));
    if (den.sign() == 0) throw DomainError("rational with zero denominator");
    return num / den;
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size() || exp_text.empty())
      throw DomainError("malformed exponent");
    if (exponent > 10000 || exponent < -10000) throw DomainError("exponent out of range");
    text = text.substr(0, e);
  }

  Rational value = parse_decimal(text);
  if (exponent != 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    value = exponent > 0 ? value * Rational(scale, mpz_class(1)) : value / Rational(scale, mpz_class(1));
  }
  return negative ? -value : value;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw DomainError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

}  // namespace circulus
