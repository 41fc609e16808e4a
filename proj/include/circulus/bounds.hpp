#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "circulus/enclosure.hpp"
#include "circulus/polygon.hpp"

namespace circulus {

enum class Method {
  archimedes,
  cusa,
  snell,
  huygens_vii,
  snell_ix,
  huygens_xvi_upper,
  huygens_final_lower,
  schuh27_lower,
  combined,
};

enum class Side { lower, upper, two_sided };

std::string_view to_string(Method m);
std::string_view to_string(Side s);
/// Accepts the canonical name with either '_' or '-' as separator.
std::optional<Method> parse_method(std::string_view name);
const std::vector<Method>& all_methods();
/// The seven methods tabulated per rung by the ladder command.
const std::vector<Method>& ladder_methods();

Side side_of(Method m);
/// Whether the method combines rung k - 1 with rung k.
bool uses_two_rungs(Method m);

/// One estimator evaluation, labelled by the side count n it is stated for.
struct BoundsRow {
  Method method;
  long n;
  Enclosure value;
  Side side;
  Dyadic width;
  int correct_digits;
};

// Polygon-level bounds on pi (unit diameter). Single-rung methods read rung
// k; two-rung methods read rungs k - 1 and k and are stated for n = sides of
// rung k - 1. A missing rung raises IndexError.

/// [C_n.lo, C'_n.hi]
Enclosure archimedes(const PolygonLadder& l, std::size_t k);
/// C_2n + (C_2n - C_n)/3, a lower bound.
Enclosure huygens_vii_lower(const PolygonLadder& l, std::size_t k);
/// 3 C_2n C'_2n / (2 C'_2n + C_2n): Cusa's 3 sin x / (2 + cos x) summed over
/// the 2n arcs x = pi/2n. Lower bound.
Enclosure cusa_lower(const PolygonLadder& l, std::size_t k);
/// (2/3) C_n + (1/3) C'_n, an upper bound.
Enclosure snell_ix_upper(const PolygonLadder& l, std::size_t k);
/// n (2 sin(pi/n) + tan(pi/n)) / 3 through the trig enclosures: the same
/// number as snell_ix_upper reached without the ladder.
Enclosure snell_upper(const PolygonLadder& l, std::size_t k);
/// C_2n + ((C_2n - C_n)/3) (4 C_2n + C_n)/(2 C_2n + 3 C_n), an upper bound.
Enclosure huygens_xvi_upper(const PolygonLadder& l, std::size_t k);
/// C_n + (10/3)(C_2n^2 - C_n^2) / (D + (8/9)(C_2n - C_n)^2 / D), D = 2 C_2n + 3 C_n.
Enclosure huygens_final_lower(const PolygonLadder& l, std::size_t k);
/// As huygens_final_lower with 27 in place of 8 (weaker).
Enclosure schuh27_lower(const PolygonLadder& l, std::size_t k);
/// [huygens_final_lower.lo, huygens_xvi_upper.hi]
Enclosure combined(const PolygonLadder& l, std::size_t k);

Enclosure evaluate(Method m, const PolygonLadder& l, std::size_t k);

/// Row for the bound stated at the side count of rung i (two-rung methods
/// therefore read rung i + 1).
BoundsRow make_row(Method m, const PolygonLadder& l, std::size_t i);

/// Largest d with |v - pi| < 10^-d for every v in value (0 if none).
int correct_digits(const Enclosure& value);

// Arc-level forms, x in radians at unit radius.

/// 3 sin x / (2 + cos x) < x on (0, pi/2].
Enclosure cusa_lower_arc(const Enclosure& x);
/// (2 sin x + tan x) / 3 > x on (0, pi/2).
Enclosure snell_upper_arc(const Enclosure& x);

/// Chord b = 2 sin(x/2) and sine c = sin x of an arc x.
struct ArcChord {
  Enclosure b;
  Enclosure c;
};
ArcChord arc_chord(const Enclosure& x);

/// c + (10/3)(b^2 - c^2)/(D + (k/9)(b - c)^2/D), D = 2b + 3c; k = 8 or 27.
Enclosure final_lower_form(const Enclosure& b, const Enclosure& c, long k = 8);
/// b + ((b - c)/3)(4b + c)/(2b + 3c)
Enclosure xvi_upper_form(const Enclosure& b, const Enclosure& c);
/// c + (10/3)(b^2 - c^2)/(2b + 3c): the same number as xvi_upper_form.
Enclosure xvi_upper_chord_form(const Enclosure& b, const Enclosure& c);

/// Arc-level inequality for a method, with b = 2 sin(x/2), c = sin x.
/// Huygens forms accept x in (0, pi]; Cusa and Snell forms (0, pi/2).
/// archimedes gives [sin x, tan x], snell_ix the form (4/3) tan(x/2) + (1/3) sin x,
/// combined the hull of the final lower and XVI upper forms.
Enclosure arc_bounds(const Enclosure& x, Method m);

}  // namespace circulus
