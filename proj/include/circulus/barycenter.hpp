#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "circulus/enclosure.hpp"
#include "circulus/verdict.hpp"

namespace circulus {

/// Circular segment of radius r and central angle theta. The vertex is the
/// midpoint of the arc; xi is the barycenter's distance from the vertex and
/// xbar = r - xi its distance from the centre.
struct SegmentGeometry {
  Enclosure r;
  Enclosure theta;
  Enclosure a;      // height r (1 - cos(theta/2))
  Enclosure b;      // chord 2 r sin(theta/2)
  Enclosure c;      // sine r sin(theta)
  Enclosure sigma;  // segment area (r^2/2)(theta - sin theta)
  Enclosure delta;  // maximum inscribed triangle a b / 2
  std::optional<Enclosure> tangent;  // tangent triangle r^2 sin^2(theta/2) tan(theta/2), theta < pi
  Enclosure xi;
  Enclosure xbar;
};

/// Requires r > 0 and 0 < theta <= pi (DomainError) and theta >= 1e-3
/// for the barycenter (IllConditioned).
SegmentGeometry segment(const Enclosure& r, const Enclosure& theta);

/// theta - sin theta, by its series below 1/4 to avoid cancellation.
Enclosure theta_minus_sin(const Enclosure& theta);

/// (4/3) r sin^3(theta/2) / (theta - sin theta), the distance from the centre.
Enclosure barycenter_exact(const Enclosure& r, const Enclosure& theta);

/// The same distance from first-moment integration over the segment,
/// by the composite midpoint rule in the angle variable x = r (1 - cos phi),
/// phi in [0, theta/2], with a rigorous second-derivative remainder. Panel
/// sums are exact, so the result does not depend on `chunks`.
Enclosure barycenter_oracle(const Enclosure& r, const Enclosure& theta, std::size_t panels = std::size_t{1} << 16,
                            std::size_t chunks = 8);

struct BalanceReport {
  Truth truth;         // holds when the residual encloses zero
  Enclosure lever;     // OM * (triangle KOH) with OG = sqrt(a (2r - a)), OM = (2/3) OG
  Enclosure moment;    // xbar * sigma
  Enclosure residual;  // lever - moment
};

/// Law of the lever about the centre; needs theta < pi.
BalanceReport balance_check(const SegmentGeometry& g);

struct RatioReport {
  Enclosure ratio;     // sigma / delta
  Enclosure balanced;  // (2/3)(2r - a)/(r - xi)
  bool agree;
};

/// sigma / delta checked against (2/3)(2r - a)/(r - xi); needs theta < pi.
RatioReport barycentric_equation_ratio(const SegmentGeometry& g);

/// Named strict inequalities of the segment (theta < pi):
/// xi > a/2, xi < 3a/5, xi > 3a/5 - 3a^2/(25 (r - 3a/5)), sigma/delta > 4/3,
/// sigma/delta < (10/3)(2r - a)/(2r + 3(r - a)), sigma < (2/3) T, and the sector
/// form of the area estimate theta < (4/3) tan(theta/2) + (1/3) sin theta.
std::vector<Verdict> segment_inequality_suite(const SegmentGeometry& g);

/// pi < (2/3) A'_n + (1/3) A_n with polygon areas at unit radius.
Verdict lemma_vi(long n, Precision p);

/// Tangent triangle area by intersecting the two tangents and summing the
/// trapezoids under the triangle's edges.
Enclosure tangent_triangle_oracle(const Enclosure& r, const Enclosure& theta);

}  // namespace circulus
