#pragma once

#include <string>

#include "circulus/enclosure.hpp"

namespace circulus {

/// Number of places after the decimal point that shows `digits`
/// significant digits of x (never negative).
int decimals_for(const Enclosure& x, int digits);

/// Common decimal prefix of lo (rounded down) and hi (rounded up) followed by
/// the differing tails in brackets, e.g. "3.14159265[33906, 37752]". A point
/// enclosure whose two roundings agree prints without brackets.
std::string render(const Enclosure& x, int digits);

/// lo rounded down and hi rounded up to `decimals` places.
std::string render_lo(const Enclosure& x, int decimals);
std::string render_hi(const Enclosure& x, int decimals);

}  // namespace circulus
