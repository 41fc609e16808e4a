#include "circulus/render.hpp"

#include <algorithm>
#include <cmath>

namespace circulus {

int decimals_for(const Enclosure& x, int digits) {
  Dyadic m = x.magnitude();
  if (m.is_zero()) return digits - 1;
  // floor(log10 |x|) from the binary exponent; off by one at worst, which
  // only shifts the rendering by a digit.
  long tens = static_cast<long>(std::floor((m.magnitude() + 1) * 0.30102999566398120));
  if (m.to_double() < std::pow(10.0, static_cast<double>(tens)) && tens > -300) --tens;
  return std::max(0, digits - 1 - static_cast<int>(tens));
}

std::string render_lo(const Enclosure& x, int decimals) { return to_decimal(x.lo(), decimals, Round::down); }

std::string render_hi(const Enclosure& x, int decimals) { return to_decimal(x.hi(), decimals, Round::up); }

std::string render(const Enclosure& x, int digits) {
  int decimals = decimals_for(x, digits);
  std::string lo = render_lo(x, decimals);
  std::string hi = render_hi(x, decimals);
  if (lo == hi) return lo;
  std::size_t common = 0;
  while (common < lo.size() && common < hi.size() && lo[common] == hi[common]) ++common;
  // Never split the sign from the integer part.
  if (common == 1 && (lo[0] == '-' || hi[0] == '-')) common = 0;
  return lo.substr(0, common) + "[" + lo.substr(common) + ", " + hi.substr(common) + "]";
}

}  // namespace circulus
