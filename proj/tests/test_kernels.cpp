#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "localspec/gamma_spectral.hpp"
#include "localspec/kernels.hpp"
#include "test_support.hpp"

using namespace localspec;
using testsupport::linspace;
using testsupport::Sampler;

TEST_CASE("map_grid: parallel equals serial bit for bit", "[kernels]") {
  const std::vector<double> ts = linspace(-40.0, 40.0, 10001);
  std::vector<Complex> a(ts.size());
  std::vector<Complex> b(ts.size());
  const auto chi = CharacterComponent::complex(3);
  auto f = [&chi](double t) { return spectral_k(chi, critical_point(t)); };
  kernels::serial::map_grid(std::span<const double>(ts), std::span<Complex>(a), f);
  kernels::parallel::map_grid(std::span<const double>(ts), std::span<Complex>(b), f);
  CHECK(a == b);
}

TEST_CASE("map_grid: exceptions propagate out of the parallel loop", "[kernels]") {
  const std::vector<double> xs = linspace(-3.0, 1.0, 9);
  std::vector<Complex> out(xs.size());
  auto f = [](double x) { return log_gamma(Complex(x, 0.0)); };
  CHECK_THROWS_AS(
      kernels::parallel::map_grid(std::span<const double>(xs), std::span<Complex>(out), f),
      PoleError);
}

TEST_CASE("matvec: parallel equals serial and Eigen", "[kernels]") {
  Sampler rng(61);
  const int n = 300;
  DenseMatrix m(n, n);
  std::vector<Complex> x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = rng.complex_in(-1, 1, -1, 1);
    for (int j = 0; j < n; ++j) m(i, j) = rng.complex_in(-1, 1, -1, 1);
  }
  std::vector<Complex> a(n);
  std::vector<Complex> b(n);
  kernels::serial::matvec(m, x, a);
  kernels::parallel::matvec(m, x, b);
  CHECK(a == b);
  const Eigen::VectorXcd ref = m * Eigen::Map<const Eigen::VectorXcd>(x.data(), n);
  for (int i = 0; i < n; ++i) CHECK(std::abs(a[i] - ref[i]) < 1e-12);
}
