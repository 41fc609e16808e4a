#include "circulus/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circulus/elementary.hpp"
#include "circulus/errors.hpp"

namespace circulus {

namespace {

struct MethodInfo {
  Method method;
  std::string_view name;
  Side side;
  bool two_rungs;
};

constexpr MethodInfo kMethods[] = {
    {Method::archimedes, "archimedes", Side::two_sided, false},
    {Method::cusa, "cusa", Side::lower, true},
    {Method::snell, "snell", Side::upper, false},
    {Method::huygens_vii, "huygens_vii", Side::lower, true},
    {Method::snell_ix, "snell_ix", Side::upper, false},
    {Method::huygens_xvi_upper, "huygens_xvi_upper", Side::upper, true},
    {Method::huygens_final_lower, "huygens_final_lower", Side::lower, true},
    {Method::schuh27_lower, "schuh27_lower", Side::lower, true},
    {Method::combined, "combined", Side::two_sided, true},
};

const MethodInfo& info(Method m) { return kMethods[static_cast<int>(m)]; }

struct Pair {
  const Enclosure& c_n;
  const Enclosure& c_2n;
};

Pair pair_at(const PolygonLadder& l, std::size_t k) {
  if (k == 0) throw IndexError("this bound needs rung index >= 1");
  return Pair{l.rung(k - 1).insc, l.rung(k).insc};
}

void require_arc(const Enclosure& x, const Enclosure& limit, bool closed, std::string_view what) {
  bool above = x.lo().sign() > 0;
  // A closed end admits any x that may equal the limit.
  bool below = closed ? x.lo() <= limit.hi() : x.hi() < limit.lo();
  if (!above || !below) throw DomainError(std::string(what) + ": arc outside its valid range");
}

}  // namespace

std::string_view to_string(Method m) { return info(m).name; }

std::string_view to_string(Side s) {
  switch (s) {
    case Side::lower:
      return "lower";
    case Side::upper:
      return "upper";
    case Side::two_sided:
      return "two_sided";
  }
  return "two_sided";
}

std::optional<Method> parse_method(std::string_view name) {
  std::string canonical(name);
  std::replace(canonical.begin(), canonical.end(), '-', '_');
  for (const auto& m : kMethods)
    if (m.name == canonical) return m.method;
  return std::nullopt;
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods = [] {
    std::vector<Method> out;
    for (const auto& m : kMethods) out.push_back(m.method);
    return out;
  }();
  return methods;
}

const std::vector<Method>& ladder_methods() {
  static const std::vector<Method> methods{Method::archimedes,          Method::huygens_vii,
                                           Method::snell_ix,            Method::huygens_xvi_upper,
                                           Method::huygens_final_lower, Method::schuh27_lower,
                                           Method::combined};
  return methods;
}

Side side_of(Method m) { return info(m).side; }

bool uses_two_rungs(Method m) { return info(m).two_rungs; }

Enclosure archimedes(const PolygonLadder& l, std::size_t k) {
  const PolygonRung& r = l.rung(k);
  return Enclosure(r.insc.lo(), r.circ.hi(), coarser(r.insc.precision(), r.circ.precision()));
}

Enclosure huygens_vii_lower(const PolygonLadder& l, std::size_t k) {
  auto [c_n, c_2n] = pair_at(l, k);
  return c_2n + (c_2n - c_n) / 3;
}

Enclosure cusa_lower(const PolygonLadder& l, std::size_t k) {
  if (k == 0) throw IndexError("cusa needs rung index >= 1");
  const PolygonRung& r = l.rung(k);
  return 3 * r.insc * r.circ / (2 * r.circ + r.insc);
}

Enclosure snell_ix_upper(const PolygonLadder& l, std::size_t k) {
  const PolygonRung& r = l.rung(k);
  return (2 * r.insc + r.circ) / 3;
}

Enclosure snell_upper(const PolygonLadder& l, std::size_t k) {
  const PolygonRung& r = l.rung(k);
  Precision p = r.insc.precision();
  Enclosure x = pi_reference(p.plus(16)) / r.n;
  return (r.n * snell_upper_arc(x)).with_precision(p);
}

Enclosure xvi_upper_form(const Enclosure& b, const Enclosure& c) {
  return b + ((b - c) / 3) * (4 * b + c) / (2 * b + 3 * c);
}

Enclosure xvi_upper_chord_form(const Enclosure& b, const Enclosure& c) {
  return c + Rational(10, 3) * (b.square() - c.square()) / (2 * b + 3 * c);
}

Enclosure final_lower_form(const Enclosure& b, const Enclosure& c, long k) {
  Enclosure d = 2 * b + 3 * c;
  Enclosure correction = Rational(k, 9) * (b - c).square() / d;
  return c + Rational(10, 3) * (b.square() - c.square()) / (d + correction);
}

Enclosure huygens_xvi_upper(const PolygonLadder& l, std::size_t k) {
  auto [c_n, c_2n] = pair_at(l, k);
  return xvi_upper_form(c_2n, c_n);
}

Enclosure huygens_final_lower(const PolygonLadder& l, std::size_t k) {
  auto [c_n, c_2n] = pair_at(l, k);
  return final_lower_form(c_2n, c_n, 8);
}

Enclosure schuh27_lower(const PolygonLadder& l, std::size_t k) {
  auto [c_n, c_2n] = pair_at(l, k);
  return final_lower_form(c_2n, c_n, 27);
}

Enclosure combined(const PolygonLadder& l, std::size_t k) {
  Enclosure lower = huygens_final_lower(l, k);
  Enclosure upper = huygens_xvi_upper(l, k);
  return Enclosure(lower.lo(), upper.hi(), coarser(lower.precision(), upper.precision()));
}

Enclosure evaluate(Method m, const PolygonLadder& l, std::size_t k) {
  switch (m) {
    case Method::archimedes:
      return archimedes(l, k);
    case Method::cusa:
      return cusa_lower(l, k);
    case Method::snell:
      return snell_upper(l, k);
    case Method::huygens_vii:
      return huygens_vii_lower(l, k);
    case Method::snell_ix:
      return snell_ix_upper(l, k);
    case Method::huygens_xvi_upper:
      return huygens_xvi_upper(l, k);
    case Method::huygens_final_lower:
      return huygens_final_lower(l, k);
    case Method::schuh27_lower:
      return schuh27_lower(l, k);
    case Method::combined:
      return combined(l, k);
  }
  throw DomainError("unknown method");
}

int correct_digits(const Enclosure& value) {
  Enclosure pi = pi_reference(value.precision().plus(64));
  Dyadic error = std::max(value.hi() - pi.lo(), pi.hi() - value.lo());
  if (error.sign() <= 0) return 0;
  // |v - pi| <= error for every v; find the largest d with error < 10^-d.
  Rational e = error.to_rational();
  int d = std::max(0, static_cast<int>(std::floor(-std::log10(error.to_double()))) - 1);
  auto tenth_power = [](int n) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(n));
    return Rational(mpz_class(1), p);
  };
  if (!(e < tenth_power(d))) return 0;
  while (e < tenth_power(d + 1)) ++d;
  return d;
}

BoundsRow make_row(Method m, const PolygonLadder& l, std::size_t i) {
  std::size_t k = uses_two_rungs(m) ? i + 1 : i;
  Enclosure value = evaluate(m, l, k);
  Dyadic width = value.width();
  int digits = correct_digits(value);
  return BoundsRow{m, l.rung(i).n, std::move(value), side_of(m), std::move(width), digits};
}

Enclosure cusa_lower_arc(const Enclosure& x) {
  Precision p = x.precision();
  Precision w = p.plus(16);
  require_arc(x, pi_reference(w).scaled(-1), true, "cusa");
  Enclosure xw = x.with_precision(w);
  return (3 * sin(xw) / (2 + cos(xw))).with_precision(p);
}

Enclosure snell_upper_arc(const Enclosure& x) {
  Precision p = x.precision();
  Precision w = p.plus(16);
  require_arc(x, pi_reference(w).scaled(-1), false, "snell");
  Enclosure xw = x.with_precision(w);
  return ((2 * sin(xw) + tan(xw)) / 3).with_precision(p);
}

ArcChord arc_chord(const Enclosure& x) { return ArcChord{2 * sin(x.scaled(-1)), sin(x)}; }

Enclosure arc_bounds(const Enclosure& x, Method m) {
  Precision p = x.precision();
  Precision w = p.plus(16);
  Enclosure xw = x.with_precision(w);
  Enclosure pi = pi_reference(w);
  auto huygens_chord = [&] {
    require_arc(x, pi, true, to_string(m));
    return arc_chord(xw);
  };
  Enclosure out = [&]() -> Enclosure {
    switch (m) {
      case Method::cusa:
        return cusa_lower_arc(xw);
      case Method::snell:
        return snell_upper_arc(xw);
      case Method::archimedes: {
        require_arc(x, pi.scaled(-1), false, "archimedes");
        Enclosure s = sin(xw), t = tan(xw);
        return Enclosure(s.lo(), t.hi(), w);
      }
      case Method::snell_ix: {
        require_arc(x, pi, false, "snell_ix");
        return Rational(4, 3) * tan(xw.scaled(-1)) + sin(xw) / 3;
      }
      case Method::huygens_vii: {
        auto [b, c] = huygens_chord();
        return b + (b - c) / 3;
      }
      case Method::huygens_xvi_upper: {
        auto [b, c] = huygens_chord();
        return xvi_upper_form(b, c);
      }
      case Method::huygens_final_lower: {
        auto [b, c] = huygens_chord();
        return final_lower_form(b, c, 8);
      }
      case Method::schuh27_lower: {
        auto [b, c] = huygens_chord();
        return final_lower_form(b, c, 27);
      }
      case Method::combined: {
        auto [b, c] = huygens_chord();
        Enclosure lower = final_lower_form(b, c, 8), upper = xvi_upper_form(b, c);
        return Enclosure(lower.lo(), upper.hi(), w);
      }
    }
    throw DomainError("unknown method");
  }();
  return out.with_precision(p);
}

}  // namespace circulus
