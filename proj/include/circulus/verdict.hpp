#pragma once

#include <string>
#include <string_view>

#include "circulus/enclosure.hpp"

namespace circulus {

/// Outcome of checking an inequality between enclosures.
enum class Truth { holds, violated, indeterminate };

std::string_view to_string(Truth t);

/// a < b certified only when the gap between a.hi and b.lo is at least one
/// ulp at the coarser working precision; violated when a >= b for every
/// pair of points; indeterminate otherwise.
Truth strictly_less(const Enclosure& a, const Enclosure& b);
inline Truth strictly_greater(const Enclosure& a, const Enclosure& b) { return strictly_less(b, a); }

/// Conjunction: violated dominates, then indeterminate.
Truth both(Truth a, Truth b);

/// Named verdict as reported by the checks and the CLI.
struct Verdict {
  std::string name;
  Truth truth = Truth::indeterminate;
  std::string detail;
};

}  // namespace circulus
