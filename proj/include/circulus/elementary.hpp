#pragma once

#include "circulus/enclosure.hpp"

namespace circulus {

/// Sound enclosure of [sqrt(lo), sqrt(hi)]; throws NegativeRadicand if lo < 0.
Enclosure enc_sqrt(const Enclosure& a);

enum class TrigFn { sin, cos, tan, arcsin, arctan };

/// Sound enclosure of fn over every point of x, at x's precision.
/// Throws DomainError outside the real domain and PoleProximity for tan
/// when cos(x) cannot be bounded away from zero.
Enclosure enc_trig(const Enclosure& x, TrigFn fn);

Enclosure sin(const Enclosure& x);
Enclosure cos(const Enclosure& x);
Enclosure tan(const Enclosure& x);
Enclosure asin(const Enclosure& x);
Enclosure atan(const Enclosure& x);

/// Enclosure of pi of width below 2^(4 - p.bits), from Machin's relation
/// pi/4 = 4 atan(1/5) - atan(1/239).
Enclosure pi_reference(Precision p);

}  // namespace circulus
