#pragma once

#include <cstddef>
#include <functional>

namespace localspec {

struct Extremum {
  double arg;
  double value;
  double error;  // spread of f over the final refinement bracket
};

/// Maximum of f on [a, b]: uniform grid of `grid_points` samples, then
/// golden-section refinement around every grid-local maximum. Deterministic.
/// With `periodic`, b is identified with a and the grid wraps.
Extremum maximize(const std::function<double(double)>& f, double a, double b,
                  std::size_t grid_points = 4096, bool periodic = false);

Extremum minimize(const std::function<double(double)>& f, double a, double b,
                  std::size_t grid_points = 4096, bool periodic = false);

}  // namespace localspec
