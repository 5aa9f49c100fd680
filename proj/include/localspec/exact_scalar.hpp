#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace localspec {

/// a + b i with a, b rational.
struct GaussianRational {
  mpq_class re{0};
  mpq_class im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }
};

/// c * L^a * R^b.
struct Term {
  GaussianRational c;
  int a = 0;  // a >= 0
  int b = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of Q(i)[L, R, 1/R] with L = log q and R = q^{1/2}. Terms are kept
/// sorted by (a, b) with no zero coefficients, so equal values have equal
/// term lists.
class ExactScalar {
 public:
  ExactScalar() = default;
  explicit ExactScalar(GaussianRational c, int a = 0, int b = 0);
  static ExactScalar integer(long n) { return ExactScalar({mpq_class(n), 0}); }
  static ExactScalar imaginary_unit() { return ExactScalar({0, 1}); }
  /// L^a R^b with coefficient 1.
  static ExactScalar monomial(int a, int b) { return ExactScalar({1, 0}, a, b); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExactScalar conj() const;
  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& other);
  ExactScalar& operator-=(const ExactScalar& other) { return *this += -other; }

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

  /// Substitute L = log q, R = sqrt(q).
  std::complex<double> evaluate(double q) const;

  std::string to_string() const;

  /// [{c_re_num, c_re_den, c_im_num, c_im_den, a, b}, ...] with all values as
  /// decimal strings.
  nlohmann::json to_json() const;
  static ExactScalar from_json(const nlohmann::json& j);

 private:
  void normalize();
  std::vector<Term> terms_;
};

}  // namespace localspec
