// Serial vs OpenMP timings for the two data-parallel kernels.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <span>
#include <vector>

#include <omp.h>

#include "localspec/gamma_spectral.hpp"
#include "localspec/kernels.hpp"
#include "localspec/padic.hpp"

using namespace localspec;

namespace {

template <class Fn>
double best_of(int reps, Fn&& fn) {
  double best = INFINITY;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, double diff) {
  std::printf("%-32s serial %9.3f ms  parallel %9.3f ms  speedup %5.2fx  max diff %.3g\n", name,
              1e3 * serial, 1e3 * parallel, serial / parallel, diff);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    const auto chi = CharacterComponent::complex(3);
    const std::size_t n = 200000;
    std::vector<double> ts(n);
    for (std::size_t i = 0; i < n; ++i) ts[i] = -100.0 + 200.0 * i / (n - 1);
    std::vector<Complex> a(n);
    std::vector<Complex> b(n);
    auto fn = [&chi](double t) { return spectral_k(chi, critical_point(t)); };
    const double s = best_of(3, [&] {
      kernels::serial::map_grid(std::span<const double>(ts), std::span<Complex>(a), fn);
    });
    const double p = best_of(3, [&] {
      kernels::parallel::map_grid(std::span<const double>(ts), std::span<Complex>(b), fn);
    });
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
    report("map_grid spectral_k, 2e5 points", s, p, diff);
  }

  for (int M : {256, 1024}) {
    const DenseMatrix m = build_truncation(BandKind::K(), 2.0, M).evaluate();
    const auto dim = static_cast<std::size_t>(m.rows());
    std::vector<Complex> x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = {std::cos(0.1 * i), std::sin(0.3 * i)};
    std::vector<Complex> a(dim);
    std::vector<Complex> b(dim);
    const int reps = 50;
    const double s = best_of(5, [&] {
      for (int r = 0; r < reps; ++r) kernels::serial::matvec(m, x, a);
    });
    const double p = best_of(5, [&] {
      for (int r = 0; r < reps; ++r) kernels::parallel::matvec(m, x, b);
    });
    double diff = 0.0;
    for (std::size_t i = 0; i < dim; ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
    char name[64];
    std::snprintf(name, sizeof name, "matvec K q=2 M=%d, x%d", M, reps);
    report(name, s, p, diff);
  }
  return 0;
}
