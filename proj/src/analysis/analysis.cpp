#include "circulus/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "circulus/elementary.hpp"
#include "circulus/errors.hpp"
#include "circulus/render.hpp"

namespace circulus {

double log2_abs(const Dyadic& x) {
  if (x.is_zero()) throw DomainError("log2 of zero");
  long exp = 0;
  double m = mpz_get_d_2exp(&exp, x.mantissa().get_mpz_t());
  return std::log2(std::fabs(m)) + static_cast<double>(exp + x.exponent());
}

OrderEstimate estimate_order(Method method, int seed, int k_first, int k_last, Precision p) {
  if (k_first < 0 || k_last - k_first + 1 < 4) throw InsufficientSamples("order estimation needs at least four rungs");
  PolygonLadder l = ladder(seed, k_last + 1, p);
  Enclosure pi = pi_reference(p.plus(128));
  Side side = side_of(method);
  std::vector<ErrorSample> samples;
  for (int k = k_first; k <= k_last; ++k) {
    BoundsRow row = make_row(method, l, static_cast<std::size_t>(k));
    Enclosure error = [&] {
      switch (side) {
        case Side::lower:
          return pi - row.value;
        case Side::upper:
          return row.value - pi;
        case Side::two_sided:
          break;
      }
      return Enclosure(row.width, row.width, p);
    }();
    if (error.contains_zero()) throw IndeterminateError("error at n = " + std::to_string(row.n) + " is not resolved");
    samples.push_back({row.n, error});
  }

  std::size_t count = std::max<std::size_t>(4, (samples.size() + 1) / 2);
  auto first = samples.end() - static_cast<std::ptrdiff_t>(count);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto it = first; it != samples.end(); ++it) {
    double x = std::log2(static_cast<double>(it->n));
    double y = log2_abs(it->error.mid());
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(count);
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  int order = static_cast<int>(std::lround(-slope));
  const ErrorSample& last = samples.back();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(last.n), static_cast<unsigned long>(std::max(0, order)));
  Enclosure coefficient = Enclosure::point(Rational(scale, mpz_class(1)), p) * last.error.abs();
  return OrderEstimate{method, slope, order, coefficient, std::move(samples)};
}

std::vector<CoefficientRow> coefficient_table(Precision p) {
  Enclosure pi = pi_reference(p.plus(32));
  Enclosure pi2 = pi.square(), pi5 = pi2 * pi2 * pi, pi7 = pi5 * pi2;
  struct Expected {
    Method method;
    std::optional<Enclosure> value;
    const char* convention;
  };
  const char* halved = "unit diameter; unit-radius constant halved";
  std::vector<Expected> expected{
      {Method::huygens_vii, pi5 / 480, halved},
      {Method::cusa, pi5 / 2880, halved},
      {Method::snell_ix, pi5 / 20, halved},
      {Method::huygens_xvi_upper, pi7 / 22400, "unit diameter as stated"},
      {Method::huygens_final_lower, std::nullopt, "measured only"},
      {Method::schuh27_lower, std::nullopt, "measured only"},
  };
  std::vector<CoefficientRow> rows;
  for (const Expected& e : expected) {
    OrderEstimate est = estimate_order(e.method, 6, 5, 8, p);
    CoefficientRow row{e.method, std::nullopt, est.coefficient, e.convention, 0.0, Truth::holds};
    if (e.value) {
      Enclosure expected_value = e.value->with_precision(p);
      Enclosure ratio = est.coefficient / expected_value - 1;
      row.expected = expected_value;
      row.relative_gap = std::fabs(ratio.mid().to_double());
      row.within_3_percent = strictly_less(ratio.abs(), Enclosure::point(Rational(3, 100), p));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Verdict arc_expansion_check(Method method, const std::vector<Rational>& x_grid, Precision p) {
  if (method != Method::cusa && method != Method::snell)
    throw DomainError("arc expansion is known for cusa and snell only");
  bool cusa = method == Method::cusa;
  Rational lead = cusa ? Rational(-1, 180) : Rational(1, 20);
  Rational next = cusa ? Rational(1, 1512) : Rational(1, 56);
  Truth truth = Truth::holds;
  std::string worst;
  double worst_ratio = 0;
  for (const Rational& q : x_grid) {
    if (q.sign() <= 0 || q > Rational(1, 4)) throw DomainError("arc expansion grid must lie in (0, 1/4]");
    Enclosure x = Enclosure::point(q, p);
    Enclosure x2 = x.square(), x5 = x2 * x2 * x, x7 = x5 * x2;
    Enclosure bound = cusa ? cusa_lower_arc(x) : snell_upper_arc(x);
    Enclosure residual = (bound - x - lead * x5).abs();
    Enclosure envelope = 2 * (next * x7);
    truth = both(truth, strictly_less(residual, envelope));
    double ratio = (residual.hi().to_double()) / envelope.lo().to_double();
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = "worst residual/envelope " + std::to_string(ratio) + " at x = " + std::to_string(q.to_double());
    }
  }
  return Verdict{std::string(to_string(method)) + " arc expansion", truth, worst};
}

}  // namespace circulus
