#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "localspec/kernels.hpp"

namespace localspec {

class NonHermitian : public std::domain_error {
 public:
  explicit NonHermitian(const std::string& what) : std::domain_error(what) {}
};

struct ExtremeEigenvalues {
  double min;
  double max;
  int iterations;
  double residual;  // largest Ritz residual norm of the two extremes
};

/// Extreme eigenvalues of a Hermitian matrix by Lanczos with full
/// reorthogonalization. On breakdown the iteration restarts from a fresh
/// vector orthogonal to the current basis. Converged when both extreme Ritz
/// residuals fall below tol * max(1, |lambda|).
ExtremeEigenvalues lanczos_extremes(const DenseMatrix& m, double tol, bool parallel = true);

/// max |m_jk - conj(m_kj)| relative to max |m_jk|.
double hermitian_defect(const DenseMatrix& m);

}  // namespace localspec
