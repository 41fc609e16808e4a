#include "circulus/verdict.hpp"

#include <algorithm>

namespace circulus {

std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::holds:
      return "holds";
    case Truth::violated:
      return "violated";
    case Truth::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

Truth strictly_less(const Enclosure& a, const Enclosure& b) {
  if (a.lo() >= b.hi()) return Truth::violated;
  auto bits = coarser(a.precision(), b.precision()).bits();
  Dyadic scale = std::max(a.magnitude(), b.magnitude());
  if (a.hi() + ulp(scale, bits) <= b.lo()) return Truth::holds;
  return Truth::indeterminate;
}

Truth both(Truth a, Truth b) {
  if (a == Truth::violated || b == Truth::violated) return Truth::violated;
  if (a == Truth::indeterminate || b == Truth::indeterminate) return Truth::indeterminate;
  return Truth::holds;
}

}  // namespace circulus
