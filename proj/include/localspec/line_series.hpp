#pragma once

#include <complex>
#include <span>

namespace localspec {

/// coef / (scale * j + shift)^power, with scale > 0 and power >= 1.
struct PartialFraction {
  std::complex<double> coef;
  double scale;
  std::complex<double> shift;
  int power;
};

struct PartialFractionSum {
  std::complex<double> value;
  double tail_bound;
  int direct_terms;
};

/// sum_{j >= first} sum_i term_i(j). Terms with power 1 must satisfy
/// sum_i coef_i / scale_i == 0 so that the series converges. The first
/// stretch is summed directly; the remainder uses Euler-Maclaurin with the
/// integral in closed form, and the direct stretch doubles until the
/// first neglected correction falls below `tolerance`.
PartialFractionSum sum_partial_fractions(std::span<const PartialFraction> terms, int first,
                                         double tolerance = 1e-13);

/// Li_{-n}(w) = sum_{m >= 1} m^n w^m for |w| < 1, in closed form through the
/// Eulerian polynomials: w A_n(w) / (1 - w)^{n+1}.
std::complex<double> polylog_negative(int n, std::complex<double> w);

}  // namespace localspec
