#include "localspec/line_series.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "localspec/specfun.hpp"

namespace localspec {

namespace {

using C = std::complex<double>;

C eval_terms(std::span<const PartialFraction> terms, double j) {
  C acc{0.0, 0.0};
  for (const auto& t : terms) acc += t.coef / std::pow(t.scale * j + t.shift, t.power);
  return acc;
}

// d^m/dj^m of the summand at j.
C derivative(std::span<const PartialFraction> terms, int m, double j) {
  C acc{0.0, 0.0};
  for (const auto& t : terms) {
    double rising = 1.0;  // p (p+1) ... (p+m-1)
    for (int r = 0; r < m; ++r) rising *= t.power + r;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    acc += t.coef * sign * rising * std::pow(t.scale, m) /
           std::pow(t.scale * j + t.shift, t.power + m);
  }
  return acc;
}

// int_J^inf of the summand.
C tail_integral(std::span<const PartialFraction> terms, double j) {
  C acc{0.0, 0.0};
  for (const auto& t : terms) {
    if (t.power == 1) {
      // sum c/a log(a X + b) -> sum c/a (log X + log a); the log X parts cancel
      acc += t.coef / t.scale * (std::log(t.scale) - std::log(t.scale * j + t.shift));
    } else {
      acc += t.coef /
             (t.scale * (t.power - 1) * std::pow(t.scale * j + t.shift, t.power - 1));
    }
  }
  return acc;
}

}  // namespace

PartialFractionSum sum_partial_fractions(std::span<const PartialFraction> terms, int first,
                                         double tolerance) {
  C log_balance{0.0, 0.0};
  for (const auto& t : terms) {
    if (t.scale <= 0.0 || t.power < 1) {
      throw std::invalid_argument("sum_partial_fractions: bad term");
    }
    if (t.power == 1) log_balance += t.coef / t.scale;
  }
  if (std::abs(log_balance) > 1e-14) {
    throw std::invalid_argument("sum_partial_fractions: divergent series");
  }

  int stretch = 64;
  for (int attempt = 0; attempt < 20; ++attempt, stretch *= 2) {
    const int cut = first + stretch;
    C direct{0.0, 0.0};
    for (int j = cut - 1; j >= first; --j) direct += eval_terms(terms, j);

    const double J = cut;
    C tail = tail_integral(terms, J) + 0.5 * eval_terms(terms, J);
    double last = INFINITY;
    bool converged = false;
    for (int k = 1; k <= detail::kBernoulliCount; ++k) {
      double fact = 1.0;  // (2k)!
      for (int r = 2; r <= 2 * k; ++r) fact *= r;
      const C corr = detail::bernoulli_even(k) / fact * derivative(terms, 2 * k - 1, J);
      const double size = std::abs(corr);
      if (size > last) break;  // asymptotic series started to grow
      tail -= corr;
      last = size;
      if (size < tolerance * 1e-3) {
        converged = true;
        break;
      }
    }
    if (converged || last < tolerance) {
      return {direct + tail, last, stretch};
    }
  }
  throw std::runtime_error("sum_partial_fractions: remainder did not converge");
}

std::complex<double> polylog_negative(int n, std::complex<double> w) {
  if (n < 0) throw std::invalid_argument("polylog_negative: n must be >= 0");
  // Eulerian numbers A(n, k), k = 0..n-1 (A(0, 0) = 1).
  std::vector<double> row{1.0};
  for (int m = 1; m <= n; ++m) {
    std::vector<double> next(static_cast<std::size_t>(m), 0.0);
    for (int k = 0; k < m; ++k) {
      const double keep = (k < static_cast<int>(row.size())) ? (k + 1) * row[k] : 0.0;
      const double lift = (k >= 1 && k - 1 < static_cast<int>(row.size()))
                              ? (m - k) * row[k - 1]
                              : 0.0;
      next[static_cast<std::size_t>(k)] = keep + lift;
    }
    row = std::move(next);
  }
  std::complex<double> poly{0.0, 0.0};
  for (auto it = row.rbegin(); it != row.rend(); ++it) poly = poly * w + *it;
  return w * poly / std::pow(1.0 - w, n + 1);
}

}  // namespace localspec
