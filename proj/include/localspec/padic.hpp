#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "localspec/exact_scalar.hpp"
#include "localspec/kernels.hpp"
#include "localspec/lanczos.hpp"
#include "localspec/specfun.hpp"

namespace localspec {

/// Dilation-invariant operators on the invariant sector of L^2(Q_p).
/// K_N carries its order N >= 1.
class BandKind {
 public:
  enum class Type { A, H, K, KN };

  static BandKind A() { return {Type::A, 0}; }
  static BandKind H() { return {Type::H, 0}; }
  static BandKind K() { return {Type::K, 0}; }
  static BandKind KN(int order);

  Type type() const { return type_; }
  int order() const { return order_; }
  std::string label() const;

  friend bool operator==(const BandKind&, const BandKind&) = default;

 private:
  BandKind(Type type, int order) : type_(type), order_(order) {}
  Type type_;
  int order_;
};

class InvalidBandKind : public std::invalid_argument {
 public:
  explicit InvalidBandKind(const std::string& what) : std::invalid_argument(what) {}
};

/// Value of H(theta) or K(theta) on the sphere |y| = q^m, theta the
/// indicator of the integers.
ExactScalar theta_value(const BandKind& kind, double q, int m);

/// t_m with entry(j, k) = t_{j-k}. A is not a band and is rejected.
ExactScalar band_coefficient(const BandKind& kind, double q, int m);

/// (2M+1) x (2M+1) window j, k in [-M, M] of an operator matrix in the
/// orthonormal basis of normalized sphere indicators.
class OperatorTruncation {
 public:
  OperatorTruncation(double q, int M);

  double q() const { return q_; }
  int M() const { return M_; }
  int dim() const { return 2 * M_ + 1; }

  const ExactScalar& at(int j, int k) const { return entries_[index(j, k)]; }
  ExactScalar& at(int j, int k) { return entries_[index(j, k)]; }

  bool is_toeplitz() const;
  bool is_hermitian() const;
  /// Entries with |j|, |k| <= M - margin agree exactly.
  bool interior_equal(const OperatorTruncation& other, int margin) const;

  DenseMatrix evaluate() const;

  friend bool operator==(const OperatorTruncation&, const OperatorTruncation&) = default;

 private:
  std::size_t index(int j, int k) const;
  double q_;
  int M_;
  std::vector<ExactScalar> entries_;
};

OperatorTruncation build_truncation(const BandKind& kind, double q, int M);

/// [A, x]: entry(j, k) -> (j - k) L entry(j, k).
OperatorTruncation bracket_with_A(const OperatorTruncation& x);

OperatorTruncation multiply(const OperatorTruncation& x, const OperatorTruncation& y);
OperatorTruncation add(const OperatorTruncation& x, const OperatorTruncation& y);
OperatorTruncation scale(const ExactScalar& c, const OperatorTruncation& x);

/// sum_{j=0}^{N} (-1)^{N-j} C(N, j) A^j H A^{N-j} with truncated products;
/// 0 <= N <= 6. Only the interior |j|, |k| <= M - N is meaningful.
OperatorTruncation binomial_kn(double q, int N, int M);

/// Closed-form circle symbol at z = e^{i theta}.
Complex symbol(const BandKind& kind, double q, double theta);

/// sum_{|m| <= terms} t_m e^{i m theta}, evaluated numerically.
Complex symbol_series(const BandKind& kind, double q, double theta, int terms);

struct SymbolRange {
  double min;
  double max;
  double argmin;
  double argmax;
  double error;
};

/// Extremes of the real symbol over theta in [0, 2 pi). Odd-order K_N is
/// anti-Hermitian; its range is reported for -i * symbol.
SymbolRange symbol_range(const BandKind& kind, double q);

/// Conjugation by the inversion: entry(j, k) -> entry(-j, -k).
OperatorTruncation inversion_conjugate(const OperatorTruncation& x);

/// Throws NonHermitian unless the evaluated matrix is Hermitian.
ExtremeEigenvalues extreme_eigenvalues(const OperatorTruncation& x, double tol);

/// Rows "j,k,re,im" with a header line.
void write_csv(std::ostream& out, const OperatorTruncation& x);
/// {"q", "M", "entries": [{"j", "k", "terms": [...]}, ...]}; zero entries omitted.
nlohmann::json to_json(const OperatorTruncation& x);

}  // namespace localspec
