#pragma once

// Shared helpers for the test binaries.

#include <string>

#include "circulus/exact.hpp"
#include "mpfr_oracle.hpp"

namespace support {

/// Both endpoints of e truncate to `text` at its own number of decimals,
/// i.e. e lies in [text, text + 10^-d) (mirrored for negative text).
inline bool truncates_to(const circulus::Enclosure& e, const std::string& text) {
  auto dot = text.find('.');
  int decimals = dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
  bool negative = !text.empty() && text[0] == '-';
  auto dir = negative ? circulus::Round::up : circulus::Round::down;
  return circulus::to_decimal(e.lo(), decimals, dir) == text && circulus::to_decimal(e.hi(), decimals, dir) == text;
}

/// Does e contain the decimal value written in text (up to its last digit,
/// read as a tiny interval of one unit in that place)?
inline bool near(const circulus::Enclosure& e, const std::string& text, const std::string& tolerance) {
  circulus::Rational v = circulus::Rational::parse(text), tol = circulus::Rational::parse(tolerance);
  return e.lo().to_rational() >= v - tol && e.hi().to_rational() <= v + tol;
}

/// n sin(pi/n), n tan(pi/n) and (n/2) sin(2 pi/n) from MPFR at `bits`.
enum class Closed { insc, circ, insc_area };

inline bool contains_closed_form(const circulus::Enclosure& e, long n, Closed which) {
  auto bits = static_cast<mpfr_prec_t>(e.precision().bits() + 200);
  oracle::Real v(bits);
  mpfr_const_pi(v.get(), MPFR_RNDN);
  if (which == Closed::insc_area) mpfr_mul_ui(v.get(), v.get(), 2, MPFR_RNDN);
  mpfr_div_si(v.get(), v.get(), n, MPFR_RNDN);
  if (which == Closed::circ)
    mpfr_tan(v.get(), v.get(), MPFR_RNDN);
  else
    mpfr_sin(v.get(), v.get(), MPFR_RNDN);
  mpfr_mul_si(v.get(), v.get(), n, MPFR_RNDN);
  if (which == Closed::insc_area) mpfr_div_ui(v.get(), v.get(), 2, MPFR_RNDN);
  // Widen by far more than the oracle's own rounding error so exact
  // endpoints such as 6 sin(pi/6) = 3 are not rejected.
  oracle::Real down(bits), up(bits);
  mpfr_mul_2si(down.get(), v.get(), -static_cast<long>(bits) + 150, MPFR_RNDN);
  mpfr_sub(down.get(), v.get(), down.get(), MPFR_RNDD);
  mpfr_mul_2si(up.get(), v.get(), -static_cast<long>(bits) + 150, MPFR_RNDN);
  mpfr_add(up.get(), v.get(), up.get(), MPFR_RNDU);
  return oracle::compare(up, e.lo()) >= 0 && oracle::compare(down, e.hi()) <= 0;
}

inline circulus::Enclosure pi_tight(unsigned bits) { return circulus::pi_reference(circulus::Precision(bits)); }

}  // namespace support
