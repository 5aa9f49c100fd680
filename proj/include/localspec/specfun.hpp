#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace localspec {

using Complex = std::complex<double>;

/// Raised when an argument lies within kPoleGuard of a pole (or zero) of the
/// requested function. Callers are expected to route around these points.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

inline constexpr double kPoleGuard = 1e-8;

// Complex-argument Gamma family.
//
// All three functions shift Re(s) upward with the functional recurrence until
// the argument is large enough for the Stirling / Bernoulli expansion, which
// is summed through B_30. Arguments within kPoleGuard of a non-positive
// integer raise PoleError.

/// log Gamma(s) on the branch that is real on the positive axis and continuous
/// on the plane cut along (-inf, 0]; exp(log_gamma(s)) == Gamma(s).
Complex log_gamma(Complex s);

/// Gamma'(s)/Gamma(s).
Complex digamma(Complex s);

/// n-th derivative of digamma, n >= 1.
Complex polygamma(int n, Complex s);

namespace detail {
/// Even-index Bernoulli numbers B_2 .. B_30 (index k -> B_{2k}, k = 1..15).
double bernoulli_even(int k);
inline constexpr int kBernoulliCount = 15;
}  // namespace detail

}  // namespace localspec
