#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP version with identical per-element arithmetic, so the two agree
// bit for bit; tests compare them and bench/ times them.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <exception>
#include <span>

#include <omp.h>

namespace localspec {

using DenseMatrix =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

namespace kernels {

namespace serial {

template <class Fn, class In, class Out>
void map_grid(std::span<const In> points, std::span<Out> out, Fn&& fn) {
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = fn(points[i]);
}

/// y = M x for a dense row-major matrix.
inline void matvec(const DenseMatrix& m, std::span<const std::complex<double>> x,
                   std::span<std::complex<double>> y) {
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  const auto cols = static_cast<std::ptrdiff_t>(m.cols());
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    const std::complex<double>* row = m.data() + i * cols;
    std::complex<double> acc{0.0, 0.0};
    for (std::ptrdiff_t j = 0; j < cols; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

}  // namespace serial

namespace parallel {

/// Exceptions thrown by fn inside the parallel region are captured and the
/// first one is rethrown after the loop.
template <class Fn, class In, class Out>
void map_grid(std::span<const In> points, std::span<Out> out, Fn&& fn) {
  std::exception_ptr failure = nullptr;
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = fn(points[i]);
    } catch (...) {
#pragma omp critical(localspec_map_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

inline void matvec(const DenseMatrix& m, std::span<const std::complex<double>> x,
                   std::span<std::complex<double>> y) {
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  const auto cols = static_cast<std::ptrdiff_t>(m.cols());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    const std::complex<double>* row = m.data() + i * cols;
    std::complex<double> acc{0.0, 0.0};
    for (std::ptrdiff_t j = 0; j < cols; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

}  // namespace parallel

}  // namespace kernels
}  // namespace localspec
