#include "localspec/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

namespace localspec {

namespace {

using Vec = std::vector<std::complex<double>>;

std::complex<double> dot(const Vec& x, const Vec& y) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double norm(const Vec& x) { return std::sqrt(dot(x, x).real()); }

// Two Gram-Schmidt passes against the basis.
void orthogonalize(const std::vector<Vec>& basis, Vec& w) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& v : basis) {
      const std::complex<double> c = dot(v, w);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * v[i];
    }
  }
}

// Deterministic start vectors; `seed` picks a different one after breakdown.
Vec start_vector(std::size_t n, int seed) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) + 1.0;
    v[i] = {1.0 + 0.5 * std::sin(0.7 * x * (seed + 1)), 0.25 * std::cos(1.3 * x + seed)};
  }
  return v;
}

struct RitzExtremes {
  double min;
  double max;
  double res_min;
  double res_max;
};

RitzExtremes ritz(const std::vector<double>& alpha, const std::vector<double>& beta,
                  double beta_next) {
  const auto k = static_cast<Eigen::Index>(alpha.size());
  Eigen::VectorXd diag(k);
  Eigen::VectorXd sub(std::max<Eigen::Index>(k - 1, 0));
  for (Eigen::Index i = 0; i < k; ++i) diag[i] = alpha[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < k; ++i) sub[i] = beta[static_cast<std::size_t>(i)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();
  return {vals[0], vals[k - 1], std::abs(beta_next * vecs(k - 1, 0)),
          std::abs(beta_next * vecs(k - 1, k - 1))};
}

}  // namespace

double hermitian_defect(const DenseMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  double scale = 0.0;
  double defect = 0.0;
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      scale = std::max(scale, std::abs(m(j, k)));
      defect = std::max(defect, std::abs(m(j, k) - std::conj(m(k, j))));
    }
  }
  return scale > 0.0 ? defect / scale : 0.0;
}

ExtremeEigenvalues lanczos_extremes(const DenseMatrix& m, double tol, bool parallel) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("lanczos_extremes: square nonempty matrix required");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("lanczos_extremes: tol must be positive");
  const auto n = static_cast<std::size_t>(m.rows());
  double scale = 0.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) scale = std::max(scale, std::abs(m.data()[i]));
  if (scale == 0.0) return {0.0, 0.0, 0, 0.0};

  std::vector<Vec> basis;
  std::vector<double> alpha;
  std::vector<double> beta;
  Vec v = start_vector(n, 0);
  double nv = norm(v);
  for (auto& x : v) x /= nv;

  Vec w(n);
  int restarts = 0;
  RitzExtremes last{0.0, 0.0, INFINITY, INFINITY};
  while (basis.size() < n) {
    basis.push_back(v);
    if (parallel) {
      kernels::parallel::matvec(m, v, w);
    } else {
      kernels::serial::matvec(m, v, w);
    }
    alpha.push_back(dot(v, w).real());
    orthogonalize(basis, w);
    double b = norm(w);

    const bool breakdown = b < 1e-12 * scale;
    const bool full = basis.size() == n;
    const bool check = full || breakdown || basis.size() % 8 == 0;
    if (check) {
      last = ritz(alpha, beta, breakdown ? 0.0 : b);
      const double lim_min = tol * std::max(1.0, std::abs(last.min));
      const double lim_max = tol * std::max(1.0, std::abs(last.max));
      // a breakdown only certifies an invariant subspace, not the extremes
      if (full || (!breakdown && last.res_min <= lim_min && last.res_max <= lim_max)) {
        break;
      }
    }
    if (breakdown) {
      w = start_vector(n, ++restarts);
      orthogonalize(basis, w);
      b = 0.0;
      nv = norm(w);
      if (nv < 1e-12) break;
      for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nv;
    } else {
      for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / b;
    }
    beta.push_back(b);
  }
  return {last.min, last.max, static_cast<int>(alpha.size()),
          std::max(last.res_min, last.res_max)};
}

}  // namespace localspec
