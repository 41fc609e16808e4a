#pragma once

#include "circulus/enclosure.hpp"
#include "circulus/verdict.hpp"

namespace circulus {

/// Circle of radius r and the parabola through the vertex and chord ends of
/// the segment of height b. Here b is the segment height and a_half the
/// half-chord (the barycenter module calls the height a).
struct ParabolaCircleConfig {
  Enclosure r;
  Enclosure b;
  Enclosure a_half;  // sqrt(2 r b - b^2)
  Enclosure p;       // (sqrt(3)/5) sqrt(5 a^2 + 2 b^2), where the curves cross
  Enclosure c;       // sqrt(10 r b - 3 b^2) / sqrt(5), the parabola's root
};

/// Requires 0 < b <= r (DomainError).
ParabolaCircleConfig configure(const Enclosure& r, const Enclosure& b);

/// (4b / (3 sqrt 5)) sqrt(10 r b - 3 b^2)
Enclosure parabolic_segment_area(const ParabolaCircleConfig& cfg);
/// pi r^2 / 2 - r^2 arcsin((r - b)/r) - (r - b) sqrt(2 r b - b^2)
Enclosure circular_segment_area(const ParabolaCircleConfig& cfg);

/// pi/4 - asin(1 - x)/2 - (1 - x) sqrt(2x - x^2)/2 - (2x / (3 sqrt 5)) sqrt(10x - 3x^2)
/// for x in (0, 1]: half the circular minus parabolic area at r = 1, b = x.
Enclosure f_of_x(const Enclosure& x);

struct AreaDifferenceReport {
  Enclosure sliver_minus_wedge;  // r^2 f(b/r)
  Truth below_f1;                // |value| < r^2 (2 sqrt(35)/15 - pi/4)(1 + 1e-6)
  Truth below_290th;             // |value| < r^2 / 290
  Truth bound_check;             // both of the above
};

AreaDifferenceReport area_difference_report(const ParabolaCircleConfig& cfg);

/// (10 - 4x)^2 - 5 (2 - x)(10 - 3x) == x^2, in exact rational arithmetic.
bool derivative_identity(const Rational& x);

}  // namespace circulus
