#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "localspec/specfun.hpp"

namespace testsupport {

using localspec::Complex;

inline double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

/// Deterministic sampler for property-style tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  Complex complex_in(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (n == 1) ? a : a + (b - a) * static_cast<double>(i) / (n - 1);
  }
  return out;
}

// Direct partial sum of -gamma - 1/s - sum_{j>=1} (1/(j+s) - 1/j), with the
// remainder from j > J estimated by Euler-Maclaurin on the summand.
inline Complex digamma_series_oracle(Complex s, int terms = 200000) {
  constexpr double kEulerGamma = 0.57721566490153286061;
  Complex sum{0.0, 0.0};
  for (int j = terms; j >= 1; --j) {
    sum += 1.0 / (static_cast<double>(j) + s) - 1.0 / static_cast<double>(j);
  }
  const double J = terms;
  auto f = [&](double j) { return 1.0 / (j + s) - 1.0 / j; };
  auto df = [&](double j) { return -1.0 / ((j + s) * (j + s)) + 1.0 / (j * j); };
  const Complex tail = -std::log(1.0 + s / J) - 0.5 * f(J) - df(J) / 12.0;
  return -kEulerGamma - 1.0 / s - sum - tail;
}

// (-1)^{n+1} n! sum_{j>=0} 1/(j+s)^{n+1}, direct sum plus integral tail.
inline Complex polygamma_series_oracle(int n, Complex s, int terms = 200000) {
  Complex sum{0.0, 0.0};
  for (int j = terms - 1; j >= 0; --j) {
    sum += 1.0 / std::pow(static_cast<double>(j) + s, n + 1);
  }
  const Complex z = static_cast<double>(terms) + s;
  // sum_{j>=terms} g(j) ~ int_terms^inf g + g(terms)/2 - g'(terms)/12
  const Complex tail = 1.0 / (static_cast<double>(n) * std::pow(z, n)) + 0.5 / std::pow(z, n + 1) +
                       static_cast<double>(n + 1) / (12.0 * std::pow(z, n + 2));
  double fact = 1.0;
  for (int m = 2; m <= n; ++m) fact *= m;
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;
  return sign * fact * (sum + tail);
}

}  // namespace testsupport
