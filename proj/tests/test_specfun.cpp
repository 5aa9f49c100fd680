#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "localspec/specfun.hpp"
#include "test_support.hpp"

using localspec::Complex;
using localspec::digamma;
using localspec::log_gamma;
using localspec::PoleError;
using localspec::polygamma;
using testsupport::rel_err;
using testsupport::Sampler;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kGamma = std::numbers::egamma;
}  // namespace

TEST_CASE("log_gamma reference values", "[specfun]") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-13);
  CHECK(rel_err(log_gamma(0.5), 0.5 * std::log(kPi)) < 1e-13);

  // 4! by direct product
  double fact = 1.0;
  for (int m = 2; m <= 4; ++m) fact *= m;
  CHECK(rel_err(log_gamma(5.0), std::log(fact)) < 1e-13);
  CHECK(std::abs(log_gamma(5.0).real() - 3.1780538303) < 1e-10);
}

TEST_CASE("log_gamma satisfies recurrence and reflection", "[specfun]") {
  Sampler rng(11);
  for (int i = 0; i < 200; ++i) {
    const Complex s = rng.complex_in(-30.0, 40.0, -60.0, 60.0);
    if (std::abs(s.imag()) < 0.1) continue;
    // log Gamma(s+1) = log Gamma(s) + Log s on this branch
    CHECK(std::abs(log_gamma(s + 1.0) - log_gamma(s) - std::log(s)) <
          1e-12 * std::max(1.0, std::abs(log_gamma(s))));
    // Gamma(s) Gamma(1-s) = pi / sin(pi s), compared through exp
    const Complex lhs = std::exp(log_gamma(s) + log_gamma(1.0 - s));
    const Complex rhs = kPi / std::sin(kPi * s);
    if (std::abs(rhs) > 1e-200 && std::abs(rhs) < 1e200) {
      CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-10);
    }
  }
}

TEST_CASE("log_gamma is continuous across the positive axis and large", "[specfun]") {
  const Complex above = log_gamma({-2.5, 1e-6});
  const Complex below = log_gamma({-2.5, -1e-6});
  // conjugate pair across the cut
  CHECK(std::abs(above - std::conj(below)) < 1e-12);

  // Stirling region: compare against (s-1/2)log s - s + log(2pi)/2 + 1/(12 s)
  const Complex s{9000.0, 4000.0};
  const Complex stirling = (s - 0.5) * std::log(s) - s +
                           0.5 * std::log(2.0 * kPi) + 1.0 / (12.0 * s) -
                           1.0 / (360.0 * s * s * s);
  CHECK(std::abs(log_gamma(s) - stirling) / std::abs(stirling) < 1e-14);
}

TEST_CASE("digamma reference values", "[specfun]") {
  const Complex oracle = testsupport::digamma_series_oracle(1.0, 10000000);
  CHECK(std::abs(oracle - (-kGamma)) < 1e-12);
  CHECK(rel_err(digamma(1.0), -kGamma) < 1e-14);
  CHECK(rel_err(digamma(2.0), 1.0 - kGamma) < 1e-14);

  const double closed = -kGamma - kPi / 2.0 - 3.0 * std::log(2.0);
  CHECK(std::abs(closed - (-4.2274535334)) < 1e-9);
  CHECK(std::abs(digamma(0.25) - closed) < 1e-12);
}

TEST_CASE("polygamma reference values", "[specfun]") {
  const double zeta2 = kPi * kPi / 6.0;
  CHECK(std::abs(testsupport::polygamma_series_oracle(1, 1.0) - zeta2) < 1e-12);
  CHECK(rel_err(polygamma(1, 1.0), zeta2) < 1e-13);
  CHECK(rel_err(polygamma(1, 2.0), zeta2 - 1.0) < 1e-13);

  const Complex minus_two_zeta3 = testsupport::polygamma_series_oracle(2, 1.0);
  CHECK(std::abs(minus_two_zeta3.real() - (-2.4041138063)) < 1e-9);
  CHECK(rel_err(polygamma(2, 1.0), minus_two_zeta3) < 1e-12);
}

TEST_CASE("digamma recurrence on the strip", "[specfun][property]") {
  Sampler rng(1);
  for (int i = 0; i < 200; ++i) {
    const Complex s = rng.complex_in(1e-3, 20.0, -50.0, 50.0);
    const Complex residual = digamma(s + 1.0) - digamma(s) - 1.0 / s;
    CHECK(std::abs(residual) < 1e-12 * std::max(1.0, std::abs(digamma(s))));
  }
}

TEST_CASE("polygamma differentiated recurrence", "[specfun][property]") {
  Sampler rng(2);
  for (int n = 1; n <= 5; ++n) {
    double fact = 1.0;
    for (int m = 2; m <= n; ++m) fact *= m;
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < 40; ++i) {
      const Complex s = rng.complex_in(0.05, 20.0, -50.0, 50.0);
      const Complex expect = sgn * fact / std::pow(s, n + 1);
      const Complex residual = polygamma(n, s + 1.0) - polygamma(n, s) - expect;
      CHECK(std::abs(residual) <
            1e-11 * std::max(1.0, std::abs(polygamma(n, s))));
    }
  }
}

TEST_CASE("digamma commutes with conjugation", "[specfun][property]") {
  Sampler rng(3);
  for (int i = 0; i < 200; ++i) {
    const Complex s = rng.complex_in(-10.0, 20.0, -50.0, 50.0);
    if (std::abs(s.imag()) < 1e-3) continue;
    CHECK(std::abs(digamma(std::conj(s)) - std::conj(digamma(s))) < 1e-13 *
          std::max(1.0, std::abs(digamma(s))));
  }
}

TEST_CASE("central difference of digamma matches trigamma", "[specfun][property]") {
  Sampler rng(4);
  const double h = 1e-4;
  for (int i = 0; i < 50; ++i) {
    const Complex s = rng.complex_in(0.2, 15.0, -20.0, 20.0);
    const Complex fd = (digamma(s + h) - digamma(s - h)) / (2.0 * h);
    CHECK(std::abs(fd - polygamma(1, s)) < 1e-6);
  }
}

TEST_CASE("expansion agrees with the defining series", "[specfun][property]") {
  Sampler rng(5);
  for (int i = 0; i < 20; ++i) {
    const Complex s = rng.complex_in(0.1, 10.0, -10.0, 10.0);
    CHECK(std::abs(digamma(s) - testsupport::digamma_series_oracle(s)) < 1e-10);
    CHECK(std::abs(polygamma(1, s) - testsupport::polygamma_series_oracle(1, s)) <
          1e-10);
  }
}

TEST_CASE("poles are reported, not returned", "[specfun][errors]") {
  for (double p : {0.0, -1.0, -2.0, -7.0}) {
    CHECK_THROWS_AS(log_gamma(p), PoleError);
    CHECK_THROWS_AS(digamma(p), PoleError);
    CHECK_THROWS_AS(polygamma(1, p), PoleError);
    CHECK_THROWS_AS(digamma(Complex(p + 5e-9, 0.0)), PoleError);
  }
  CHECK_NOTHROW(digamma(Complex(-1.0, 1e-6)));
  CHECK_THROWS_AS(polygamma(0, 1.0), std::invalid_argument);
}
