#include "localspec/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace localspec {

namespace detail {

namespace {
// B_{2k} as num/den, k = 1..15.
constexpr std::array<std::pair<double, double>, kBernoulliCount> kBernoulli{{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};
}  // namespace

double bernoulli_even(int k) {
  if (k < 1 || k > kBernoulliCount) {
    throw std::out_of_range("bernoulli_even: index outside 1..15");
  }
  const auto& [num, den] = kBernoulli[static_cast<std::size_t>(k - 1)];
  return num / den;
}

}  // namespace detail

namespace {

constexpr double kShiftThreshold = 12.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_pole(Complex s, const char* fn) {
  const double n = std::round(s.real());
  if (n <= 0.0 && std::abs(s - Complex(n, 0.0)) < kPoleGuard) {
    std::ostringstream msg;
    msg << fn << ": argument (" << s.real() << ", " << s.imag()
        << ") is at a pole";
    throw PoleError(msg.str());
  }
}

}  // namespace

Complex log_gamma(Complex s) {
  check_pole(s, "log_gamma");
  // log Gamma(s) = log Gamma(s + m) - sum_{k<m} Log(s + k). Each principal Log
  // is analytic off its own cut, so the sum carries the continuous branch.
  Complex shift{0.0, 0.0};
  Complex z = s;
  while (z.real() < kShiftThreshold) {
    shift += std::log(z);
    z += 1.0;
  }

  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex power = inv;
  Complex series{0.0, 0.0};
  for (int k = 1; k <= detail::kBernoulliCount; ++k) {
    const double coef = detail::bernoulli_even(k) / (2.0 * k * (2.0 * k - 1.0));
    const Complex term = coef * power;
    series += term;
    if (std::abs(term) < kEps * 1e-3) break;
    power *= inv2;
  }
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + series - shift;
}

Complex digamma(Complex s) {
  check_pole(s, "digamma");
  Complex shift{0.0, 0.0};
  Complex z = s;
  while (z.real() < kShiftThreshold) {
    shift += 1.0 / z;
    z += 1.0;
  }

  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex power = inv2;
  Complex series{0.0, 0.0};
  for (int k = 1; k <= detail::kBernoulliCount; ++k) {
    const Complex term = detail::bernoulli_even(k) / (2.0 * k) * power;
    series += term;
    if (std::abs(term) < kEps * 1e-3) break;
    power *= inv2;
  }
  return std::log(z) - 0.5 * inv - series - shift;
}

Complex polygamma(int n, Complex s) {
  if (n < 1) {
    throw std::invalid_argument("polygamma: order must be >= 1");
  }
  check_pole(s, "polygamma");

  double n_factorial = 1.0;
  for (int m = 2; m <= n; ++m) n_factorial *= m;
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}

  // psi^(n)(s) = psi^(n)(s+1) + (-1)^{n+1} n! / s^{n+1}
  const double threshold = kShiftThreshold + n;
  Complex shift{0.0, 0.0};
  Complex z = s;
  while (z.real() < threshold) {
    shift += 1.0 / std::pow(z, n + 1);
    z += 1.0;
  }
  shift *= sign * n_factorial;

  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  const Complex inv_n = std::pow(inv, n);
  // (n-1)!/z^n + n!/(2 z^{n+1}) + sum_k B_2k (2k+n-1)!/(2k)! / z^{2k+n}
  Complex series = (n_factorial / n) * inv_n + 0.5 * n_factorial * inv_n * inv;
  Complex power = inv_n * inv2;
  for (int k = 1; k <= detail::kBernoulliCount; ++k) {
    double ratio = 1.0;  // (2k+n-1)! / (2k)!
    for (int m = 2 * k + 1; m <= 2 * k + n - 1; ++m) ratio *= m;
    const Complex term = detail::bernoulli_even(k) * ratio * power;
    series += term;
    if (std::abs(term) < kEps * 1e-3 * std::abs(series)) break;
    power *= inv2;
  }
  return sign * series + shift;
}

}  // namespace localspec
