#include "localspec/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "localspec/kernels.hpp"

namespace localspec {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt 5 - 1)/2

Extremum golden_max(const std::function<double(double)>& f, double lo, double hi) {
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  const double width0 = hi - lo;
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * std::max(1.0, width0); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double fm = f(mid);
  const double spread = std::max({std::abs(fm - f(lo)), std::abs(fm - f(hi)),
                                  std::abs(f1 - f2)});
  return {mid, fm, spread};
}

}  // namespace

Extremum maximize(const std::function<double(double)>& f, double a, double b,
                  std::size_t grid_points, bool periodic) {
  const std::size_t n = std::max<std::size_t>(grid_points, 3);
  const double h = periodic ? (b - a) / static_cast<double>(n)
                            : (b - a) / static_cast<double>(n - 1);
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = a + h * static_cast<double>(i);
  std::vector<double> ys(n);
  kernels::parallel::map_grid(std::span<const double>(xs), std::span<double>(ys), f);

  Extremum best{xs[0], ys[0], 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    double left;
    double right;
    if (periodic) {
      left = ys[(i + n - 1) % n];
      right = ys[(i + 1) % n];
    } else {
      left = (i == 0) ? -INFINITY : ys[i - 1];
      right = (i + 1 == n) ? -INFINITY : ys[i + 1];
    }
    if (ys[i] < left || ys[i] < right) continue;

    double lo = xs[i] - h;
    double hi = xs[i] + h;
    if (!periodic) {
      lo = std::max(lo, a);
      hi = std::min(hi, b);
    }
    Extremum cand = golden_max(f, lo, hi);
    if (cand.value < ys[i]) cand = {xs[i], ys[i], cand.error};
    if (cand.value > best.value) best = cand;
  }
  return best;
}

Extremum minimize(const std::function<double(double)>& f, double a, double b,
                  std::size_t grid_points, bool periodic) {
  Extremum e = maximize([&f](double x) { return -f(x); }, a, b, grid_points, periodic);
  e.value = -e.value;
  return e;
}

}  // namespace localspec
