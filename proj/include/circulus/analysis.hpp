#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circulus/bounds.hpp"
#include "circulus/verdict.hpp"

namespace circulus {

struct ErrorSample {
  long n;
  Enclosure error;  // pi - bound (lower), bound - pi (upper), width (two-sided)
};

struct OrderEstimate {
  Method method;
  double slope;           // least-squares slope of log2 error against log2 n
  int order;              // round(-slope)
  Enclosure coefficient;  // n^order * error at the largest n
  std::vector<ErrorSample> samples;
};

/// Errors of `method` on the ladder from `seed` at rungs k_first..k_last,
/// measured against pi at 128 bits beyond p. The slope uses the last
/// max(4, ceil(K/2)) of the K samples. Throws InsufficientSamples for fewer
/// than four rungs and IndeterminateError when an error is not bounded
/// away from zero.
OrderEstimate estimate_order(Method method, int seed, int k_first, int k_last, Precision p);

struct CoefficientRow {
  Method method;
  std::optional<Enclosure> expected;
  Enclosure measured;
  std::string unit_convention;
  double relative_gap;  // |measured / expected - 1|, or 0 when measured only
  Truth within_3_percent;
};

/// Expected error constants (unit diameter) against measurement at n = 1536.
std::vector<CoefficientRow> coefficient_table(Precision p);

/// For cusa: |bound - x + x^5/180| <= 2 x^7/1512; for snell:
/// |bound - x - x^5/20| <= 2 x^7/56, at every grid point in (0, 1/4].
Verdict arc_expansion_check(Method method, const std::vector<Rational>& x_grid, Precision p);

/// log2 |x| for a nonzero dyadic, accurate to double precision.
double log2_abs(const Dyadic& x);

}  // namespace circulus
