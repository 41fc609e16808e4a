#include "circulus/barycenter.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <future>
#include <string>

#include "circulus/elementary.hpp"
#include "circulus/errors.hpp"
#include "circulus/polygon.hpp"

namespace circulus {

namespace {

constexpr unsigned kGuard = 16;

void require_angle(const Enclosure& r, const Enclosure& theta) {
  if (!r.positive()) throw DomainError("segment radius must be positive");
  if (!theta.positive()) throw DomainError("segment angle must be positive");
  if (theta.lo() > pi_reference(theta.precision().plus(kGuard)).hi())
    throw DomainError("segment angle must not exceed pi");
}

void require_below_semicircle(const SegmentGeometry& g) {
  if (!(g.theta.hi() < pi_reference(g.theta.precision().plus(kGuard)).lo()))
    throw DomainError("this check needs a segment smaller than a semicircle");
}

// Fixed-point interval with endpoints scaled by 2^F.
struct Fixed {
  mpz_class lo, hi;
};

Fixed to_fixed(const Enclosure& e, unsigned f) {
  auto scale = [f](const Dyadic& d, Round dir) {
    mpz_class m = d.mantissa();
    long shift = d.exponent() + static_cast<long>(f);
    if (shift >= 0) {
      mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    } else if (dir == Round::down) {
      mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    } else {
      mpz_cdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    }
    return m;
  };
  return {scale(e.lo(), Round::down), scale(e.hi(), Round::up)};
}

struct SinCos {
  Fixed s;
  Fixed c;
};

// Exact sums: sin^2 at scale 2^(2F), (1 - cos) sin^2 at scale 2^(3F).
struct PanelSums {
  mpz_class zero_lo, zero_hi;
  mpz_class one_lo, one_hi;
};

// Exact product interval of a and b, reusing the caller's scratch space.
class Multiplier {
 public:
  void operator()(const mpz_class& alo, const mpz_class& ahi, const mpz_class& blo, const mpz_class& bhi,
                  mpz_class& lo, mpz_class& hi) {
    if (sgn(alo) >= 0 && sgn(blo) >= 0) {
      mpz_mul(lo.get_mpz_t(), alo.get_mpz_t(), blo.get_mpz_t());
      mpz_mul(hi.get_mpz_t(), ahi.get_mpz_t(), bhi.get_mpz_t());
      return;
    }
    mpz_mul(p_[0].get_mpz_t(), alo.get_mpz_t(), blo.get_mpz_t());
    mpz_mul(p_[1].get_mpz_t(), alo.get_mpz_t(), bhi.get_mpz_t());
    mpz_mul(p_[2].get_mpz_t(), ahi.get_mpz_t(), blo.get_mpz_t());
    mpz_mul(p_[3].get_mpz_t(), ahi.get_mpz_t(), bhi.get_mpz_t());
    auto [mn, mx] = std::minmax_element(p_.begin(), p_.end());
    lo = *mn;
    hi = *mx;
  }

 private:
  std::array<mpz_class, 4> p_;
};

// Midpoints (j + 1/2) h are split as q B h + (s + 1/2) h so every panel
// reads two fixed table entries, whatever chunk it falls in.
PanelSums panel_sums(const std::vector<SinCos>& coarse, const std::vector<SinCos>& fine, std::size_t first,
                     std::size_t last, std::size_t block, unsigned f) {
  PanelSums out;
  Multiplier mul;
  mpz_class one;
  mpz_ui_pow_ui(one.get_mpz_t(), 2, f);
  mpz_class a_lo, a_hi, b_lo, b_hi, s_lo, s_hi, c_lo, c_hi, q_lo, q_hi, m_lo, m_hi, t_lo, t_hi;
  for (std::size_t j = first; j < last; ++j) {
    const SinCos& u = coarse[j / block];
    const SinCos& v = fine[j % block];
    // sin(u + v) = su cv + cu sv, rounded outward back to scale 2^F.
    mul(u.s.lo, u.s.hi, v.c.lo, v.c.hi, a_lo, a_hi);
    mul(u.c.lo, u.c.hi, v.s.lo, v.s.hi, b_lo, b_hi);
    s_lo = a_lo + b_lo;
    s_hi = a_hi + b_hi;
    mpz_fdiv_q_2exp(s_lo.get_mpz_t(), s_lo.get_mpz_t(), f);
    mpz_cdiv_q_2exp(s_hi.get_mpz_t(), s_hi.get_mpz_t(), f);
    // cos(u + v) = cu cv - su sv.
    mul(u.c.lo, u.c.hi, v.c.lo, v.c.hi, a_lo, a_hi);
    mul(u.s.lo, u.s.hi, v.s.lo, v.s.hi, b_lo, b_hi);
    c_lo = a_lo - b_hi;
    c_hi = a_hi - b_lo;
    mpz_fdiv_q_2exp(c_lo.get_mpz_t(), c_lo.get_mpz_t(), f);
    mpz_cdiv_q_2exp(c_hi.get_mpz_t(), c_hi.get_mpz_t(), f);
    // sin^2, exact at scale 2^(2F).
    if (sgn(s_lo) < 0) s_lo = 0;
    mpz_mul(q_lo.get_mpz_t(), s_lo.get_mpz_t(), s_lo.get_mpz_t());
    mpz_mul(q_hi.get_mpz_t(), s_hi.get_mpz_t(), s_hi.get_mpz_t());
    // (1 - cos) sin^2, exact at scale 2^(3F).
    m_lo = one - c_hi;
    m_hi = one - c_lo;
    mul(m_lo, m_hi, q_lo, q_hi, t_lo, t_hi);
    out.zero_lo += q_lo;
    out.zero_hi += q_hi;
    out.one_lo += t_lo;
    out.one_hi += t_hi;
  }
  return out;
}

Enclosure series_theta_minus_sin(const Enclosure& theta) {
  // theta^3/3! - theta^5/5! + ..., remainder below the first omitted term.
  Precision w = theta.precision();
  Enclosure t2 = theta.square();
  Enclosure term = theta * t2 / 6;
  Enclosure sum = term;
  Dyadic tol(mpz_class(1), term.lo().magnitude() - static_cast<long>(w.bits()) - 4);
  for (long k = 2;; ++k) {
    term = -(term * t2) / ((2 * k) * (2 * k + 1));
    Dyadic m = term.magnitude();
    if (m < tol) return sum + Enclosure(-m, m, w);
    sum = sum + term;
  }
}

}  // namespace

Enclosure theta_minus_sin(const Enclosure& theta) {
  Precision p = theta.precision();
  Enclosure w = theta.with_precision(p.plus(kGuard));
  if (theta.hi() < Dyadic(mpz_class(1), -2)) return series_theta_minus_sin(w).with_precision(p);
  return (w - sin(w)).with_precision(p);
}

Enclosure barycenter_exact(const Enclosure& r, const Enclosure& theta) {
  require_angle(r, theta);
  if (theta.lo().to_rational() < Rational(1, 1000))
    throw IllConditioned("barycenter formula is ill-conditioned for theta < 1e-3");
  Precision p = coarser(r.precision(), theta.precision());
  Enclosure t = theta.with_precision(p.plus(kGuard));
  Enclosure s = sin(t.scaled(-1));
  return (Rational(4, 3) * r * s.square() * s / theta_minus_sin(t)).with_precision(p);
}

SegmentGeometry segment(const Enclosure& r, const Enclosure& theta) {
  require_angle(r, theta);
  Precision p = coarser(r.precision(), theta.precision());
  Precision w = p.plus(kGuard);
  Enclosure rw = r.with_precision(w), t = theta.with_precision(w);
  Enclosure half = t.scaled(-1);
  Enclosure s = sin(half);
  Enclosure quarter_sin = sin(t.scaled(-2));
  Enclosure a = 2 * rw * quarter_sin.square();
  Enclosure b = 2 * rw * s;
  Enclosure c = rw * sin(t);
  Enclosure sigma = rw.square() * theta_minus_sin(t) / 2;
  Enclosure delta = a * b / 2;
  std::optional<Enclosure> tangent;
  if (t.hi() < pi_reference(w).lo()) tangent = (rw.square() * s.square() * tan(half)).with_precision(p);
  Enclosure xbar = barycenter_exact(rw, t);
  Enclosure xi = rw - xbar;
  return SegmentGeometry{r.with_precision(p),
                         theta.with_precision(p),
                         a.with_precision(p),
                         b.with_precision(p),
                         c.with_precision(p),
                         sigma.with_precision(p),
                         delta.with_precision(p),
                         std::move(tangent),
                         xi.with_precision(p),
                         xbar.with_precision(p)};
}

Enclosure barycenter_oracle(const Enclosure& r, const Enclosure& theta, std::size_t panels, std::size_t chunks) {
  require_angle(r, theta);
  if (panels == 0) throw DomainError("quadrature needs at least one panel");
  chunks = std::clamp<std::size_t>(chunks, 1, panels);
  Precision p = coarser(r.precision(), theta.precision());
  Precision w = p.plus(kGuard);
  Enclosure length = theta.with_precision(w).scaled(-1);
  Enclosure h = length / static_cast<long>(panels);

  std::size_t block = std::bit_ceil(static_cast<std::size_t>(std::max(1.0, std::sqrt(double(panels)))));
  unsigned f = w.bits() + 8;
  std::vector<SinCos> coarse, fine;
  for (std::size_t q = 0; q * block < panels; ++q) {
    Enclosure angle = static_cast<long>(q * block) * h;
    coarse.push_back({to_fixed(sin(angle), f), to_fixed(cos(angle), f)});
  }
  for (std::size_t s = 0; s < block; ++s) {
    Enclosure angle = (h * static_cast<long>(2 * s + 1)).scaled(-1);
    fine.push_back({to_fixed(sin(angle), f), to_fixed(cos(angle), f)});
  }

  std::vector<std::future<PanelSums>> parts;
  std::size_t step = (panels + chunks - 1) / chunks;
  for (std::size_t first = 0; first < panels; first += step) {
    std::size_t last = std::min(panels, first + step);
    parts.push_back(
        std::async(std::launch::async, panel_sums, std::cref(coarse), std::cref(fine), first, last, block, f));
  }
  PanelSums total;
  for (auto& part : parts) {
    PanelSums s = part.get();
    total.zero_lo += s.zero_lo;
    total.zero_hi += s.zero_hi;
    total.one_lo += s.one_lo;
    total.one_hi += s.one_hi;
  }
  long two_f = -2 * static_cast<long>(f), three_f = -3 * static_cast<long>(f);
  Enclosure sum0(Dyadic(total.zero_lo, two_f), Dyadic(total.zero_hi, two_f), w);
  Enclosure sum1(Dyadic(total.one_lo, three_f), Dyadic(total.one_hi, three_f), w);

  // Midpoint rule error: |E| <= L h^2 max|g''| / 24, with |(sin^2)''| <= 2 and
  // |((1 - cos) sin^2)''| <= 4.5.
  Dyadic l_max = length.hi();
  Dyadic h_max = h.hi();
  Dyadic base = l_max * h_max * h_max;
  Dyadic e0 = round(base.to_rational() * Rational(2, 24), w.bits(), Round::up);
  Dyadic e1 = round(base.to_rational() * Rational(9, 48), w.bits(), Round::up);
  Enclosure m0 = h * sum0 + Enclosure(-e0, e0, w);
  Enclosure m1 = h * sum1 + Enclosure(-e1, e1, w);
  Enclosure rw = r.with_precision(w);
  Enclosure xi = rw * m1 / m0;
  return (rw - xi).with_precision(p);
}

BalanceReport balance_check(const SegmentGeometry& g) {
  require_below_semicircle(g);
  Enclosure og = enc_sqrt(g.a * (2 * g.r - g.a));
  Enclosure om = Rational(2, 3) * og;
  Enclosure koh = g.b.square() / 4;
  Enclosure lever = om * koh;
  Enclosure moment = g.xbar * g.sigma;
  Enclosure residual = lever - moment;
  return BalanceReport{residual.contains_zero() ? Truth::holds : Truth::violated, lever, moment, residual};
}

RatioReport barycentric_equation_ratio(const SegmentGeometry& g) {
  require_below_semicircle(g);
  Enclosure ratio = g.sigma / g.delta;
  Enclosure balanced = Rational(2, 3) * (2 * g.r - g.a) / (g.r - g.xi);
  return RatioReport{ratio, balanced, ratio.overlaps(balanced)};
}

std::vector<Verdict> segment_inequality_suite(const SegmentGeometry& g) {
  require_below_semicircle(g);
  const Enclosure &r = g.r, &a = g.a, &xi = g.xi;
  Enclosure three_fifths = Rational(3, 5) * a;
  Enclosure schuh = three_fifths - 3 * a.square() / (25 * (r - three_fifths));
  Enclosure ratio = g.sigma / g.delta;
  Enclosure xv_upper = Rational(10, 3) * (2 * r - a) / (2 * r + 3 * (r - a));
  Enclosure half = g.theta.scaled(-1);
  Enclosure sector = Rational(4, 3) * tan(half) + sin(g.theta) / 3;

  std::vector<Verdict> out;
  out.push_back({"hofmann: xi > a/2", strictly_greater(xi, a.scaled(-1)), ""});
  out.push_back({"xiv: xi < 3a/5", strictly_less(xi, three_fifths), ""});
  out.push_back({"schuh: xi > 3a/5 - 3a^2/(25(r - 3a/5))", strictly_greater(xi, schuh), ""});
  out.push_back({"xv: sigma/delta > 4/3", strictly_greater(ratio, Enclosure::point(Rational(4, 3), ratio.precision())),
                 ""});
  out.push_back({"xv: sigma/delta < (10/3)(2r - a)/(2r + 3(r - a))", strictly_less(ratio, xv_upper), ""});
  out.push_back({"iv: sigma < (2/3) T", strictly_less(g.sigma, Rational(2, 3) * *g.tangent), ""});
  out.push_back({"vi: theta < (4/3) tan(theta/2) + (1/3) sin theta", strictly_less(g.theta, sector), ""});
  return out;
}

Verdict lemma_vi(long n, Precision p) {
  PolygonRung rung = trig_rung(n, p);
  Enclosure estimate = Rational(2, 3) * rung.circ_area + rung.insc_area / 3;
  Enclosure pi = pi_reference(p);
  Enclosure margin = estimate - pi;
  return Verdict{"vi: pi < (2/3) A'_" + std::to_string(n) + " + (1/3) A_" + std::to_string(n),
                 strictly_less(pi, estimate), "margin " + std::to_string(margin.lo().to_double())};
}

Enclosure tangent_triangle_oracle(const Enclosure& r, const Enclosure& theta) {
  require_angle(r, theta);
  Precision p = coarser(r.precision(), theta.precision());
  Precision w = p.plus(kGuard);
  Enclosure rw = r.with_precision(w), half = theta.with_precision(w).scaled(-1);
  // Centre at the origin, vertex on the positive y axis.
  Enclosure s = sin(half), c = cos(half);
  Enclosure ax = -(rw * s), ay = rw * c;
  Enclosure cx = rw * s, cy = rw * c;
  // Tangent at a point P of the circle: X . P = r^2. Cramer's rule.
  Enclosure r2 = rw.square();
  Enclosure det = ax * cy - ay * cx;
  Enclosure kx = (r2 * cy - ay * r2) / det;
  Enclosure ky = (ax * r2 - r2 * cx) / det;
  // Shoelace sum of the trapezoids under A -> K -> C -> A.
  auto trapezoid = [](const Enclosure& x0, const Enclosure& y0, const Enclosure& x1, const Enclosure& y1) {
    return (x1 - x0) * (y0 + y1) / 2;
  };
  Enclosure signed_area = trapezoid(ax, ay, kx, ky) + trapezoid(kx, ky, cx, cy) + trapezoid(cx, cy, ax, ay);
  return signed_area.abs().with_precision(p);
}

}  // namespace circulus
