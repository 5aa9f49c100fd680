#include "localspec/gamma_spectral.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "localspec/extrema.hpp"
#include "localspec/line_series.hpp"

namespace localspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;
constexpr Complex kI{0.0, 1.0};

double power_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

void require_archimedean(const CharacterComponent& chi, const char* fn) {
  if (!chi.place().archimedean()) {
    throw std::invalid_argument(std::string(fn) + ": archimedean component required, got " +
                                chi.label());
  }
}

// w1 = q^{s-1}, w2 = q^{-s}; log Gamma_q = log(1 - w1) - log(1 - w2).
struct FiniteArgs {
  double log_q;
  Complex w1;
  Complex w2;
};

FiniteArgs finite_args(double q, Complex s) {
  const double log_q = std::log(q);
  FiniteArgs a{log_q, std::exp((s - 1.0) * log_q), std::exp(-s * log_q)};
  if (std::abs(1.0 - a.w2) < kPoleGuard || std::abs(1.0 - a.w1) < kPoleGuard) {
    std::ostringstream msg;
    msg << "finite Gamma factor: s = (" << s.real() << ", " << s.imag()
        << ") is at a pole or zero";
    throw PoleError(msg.str());
  }
  return a;
}

}  // namespace

Place Place::finite(double q) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw std::invalid_argument("Place::finite: residue cardinality must exceed 1");
  }
  return Place(PlaceKind::finite, q);
}

CharacterComponent CharacterComponent::inverse() const {
  if (kind_ == ComponentKind::complex_n) return complex(-index_);
  return *this;
}

double CharacterComponent::value_at_minus_one() const {
  switch (kind_) {
    case ComponentKind::odd:
      return -1.0;
    case ComponentKind::complex_n:
      return power_sign(index_);
    default:
      return 1.0;
  }
}

std::string CharacterComponent::label() const {
  std::ostringstream out;
  switch (kind_) {
    case ComponentKind::even:
      out << "real:+";
      break;
    case ComponentKind::odd:
      out << "real:-";
      break;
    case ComponentKind::complex_n:
      out << "complex:" << index_;
      break;
    case ComponentKind::unramified:
      out << "finite:" << place_.q() << ":unram";
      break;
    case ComponentKind::ramified:
      out << "finite:" << place_.q() << ":ram";
      break;
  }
  return out.str();
}

Complex gamma_factor(const CharacterComponent& chi, Complex s) {
  const double log_pi = std::log(kPi);
  switch (chi.kind()) {
    case ComponentKind::even:
      return std::exp((0.5 - s) * log_pi + log_gamma(s / 2.0) - log_gamma((1.0 - s) / 2.0));
    case ComponentKind::odd:
      return kI * std::exp((0.5 - s) * log_pi + log_gamma((s + 1.0) / 2.0) -
                           log_gamma((2.0 - s) / 2.0));
    case ComponentKind::complex_n: {
      const int n = std::abs(chi.index());
      const double half = 0.5 * n;
      // i^{|N|}
      static constexpr std::array<Complex, 4> kIPow{Complex{1, 0}, Complex{0, 1},
                                                    Complex{-1, 0}, Complex{0, -1}};
      return kIPow[static_cast<std::size_t>(n % 4)] *
             std::exp((1.0 - 2.0 * s) * std::log(2.0 * kPi) + log_gamma(half + s) -
                      log_gamma(half + 1.0 - s));
    }
    case ComponentKind::unramified: {
      const FiniteArgs a = finite_args(chi.place().q(), s);
      return (1.0 - a.w1) / (1.0 - a.w2);
    }
    case ComponentKind::ramified:
      break;
  }
  throw RamifiedUnsupported("gamma_factor: ramified components carry no Gamma data");
}

Complex log_gamma_factor_derivative(const CharacterComponent& chi, int order, Complex s) {
  if (order < 1) {
    throw std::invalid_argument("log_gamma_factor_derivative: order must be >= 1");
  }
  // d^order/ds^order log Gamma(a s + b) = a^order psi^{(order-1)}(a s + b)
  auto psi = [](int n, Complex z) { return n == 0 ? digamma(z) : polygamma(n, z); };
  const int n = order - 1;
  const double minus = power_sign(order);  // (-1)^order

  switch (chi.kind()) {
    case ComponentKind::even: {
      const double scale = std::pow(0.5, order);
      const Complex base = (order == 1) ? Complex(-std::log(kPi)) : Complex(0.0);
      return base + scale * (psi(n, s / 2.0) - minus * psi(n, (1.0 - s) / 2.0));
    }
    case ComponentKind::odd: {
      const double scale = std::pow(0.5, order);
      const Complex base = (order == 1) ? Complex(-std::log(kPi)) : Complex(0.0);
      return base + scale * (psi(n, (s + 1.0) / 2.0) - minus * psi(n, (2.0 - s) / 2.0));
    }
    case ComponentKind::complex_n: {
      const double half = 0.5 * std::abs(chi.index());
      const Complex base = (order == 1) ? Complex(-2.0 * std::log(2.0 * kPi)) : Complex(0.0);
      return base + psi(n, half + s) - minus * psi(n, half + 1.0 - s);
    }
    case ComponentKind::unramified: {
      // H = -L sum_{m>=1} (w1^m + w2^m), and d/ds w1^m = m L w1^m,
      // d/ds w2^m = -m L w2^m.
      const FiniteArgs a = finite_args(chi.place().q(), s);
      return -std::pow(a.log_q, order) *
             (polylog_negative(n, a.w1) + power_sign(n) * polylog_negative(n, a.w2));
    }
    case ComponentKind::ramified:
      if (order >= 2) return {0.0, 0.0};
      break;
  }
  throw RamifiedUnsupported(
      "log_gamma_factor_derivative: the constant H on ramified components is not exposed");
}

Complex spectral_h(const CharacterComponent& chi, Complex s) {
  return log_gamma_factor_derivative(chi, 1, s);
}

Complex spectral_k(const CharacterComponent& chi, Complex s) {
  return -kI * log_gamma_factor_derivative(chi, 2, s);
}

Complex spectral_kn(const CharacterComponent& chi, int order, Complex s) {
  if (order < 1) throw std::invalid_argument("spectral_kn: order must be >= 1");
  return log_gamma_factor_derivative(chi, order + 1, s);
}

SeriesEstimate h_line_series_estimate(const CharacterComponent& chi, double t) {
  require_archimedean(chi, "h_line_series");
  const Complex it{0.0, t};
  std::vector<PartialFraction> terms;
  double head = 0.0;
  switch (chi.kind()) {
    case ComponentKind::even:
    case ComponentKind::odd: {
      // u = 2j + c: the summand is 1/j - 2u/(u^2+t^2); its j = 0 part goes in head
      const double c = (chi.kind() == ComponentKind::even) ? 0.5 : 1.5;
      head = -std::log(kPi) - kEulerGamma - 2.0 * c / (c * c + t * t);
      terms = {{1.0, 1.0, 0.0, 1}, {-1.0, 2.0, c + it, 1}, {-1.0, 2.0, c - it, 1}};
      break;
    }
    case ComponentKind::complex_n: {
      const double a = 0.5 * (std::abs(chi.index()) + 1);
      head = -2.0 * std::log(2.0 * kPi) - 2.0 * kEulerGamma - 2.0 * a / (a * a + t * t);
      terms = {{2.0, 1.0, 0.0, 1}, {-1.0, 1.0, a + it, 1}, {-1.0, 1.0, a - it, 1}};
      break;
    }
    default:
      break;
  }
  const PartialFractionSum sum = sum_partial_fractions(terms, 1);
  return {head + sum.value.real(), sum.tail_bound, sum.direct_terms};
}

SeriesEstimate k_line_series_estimate(const CharacterComponent& chi, double t) {
  require_archimedean(chi, "k_line_series");
  const Complex it{0.0, t};
  // (2u)(2t)/(u^2+t^2)^2 = i/(u+it)^2 - i/(u-it)^2
  std::vector<PartialFraction> terms;
  switch (chi.kind()) {
    case ComponentKind::even:
    case ComponentKind::odd: {
      const double c = (chi.kind() == ComponentKind::even) ? 0.5 : 1.5;
      terms = {{-kI, 2.0, c + it, 2}, {kI, 2.0, c - it, 2}};
      break;
    }
    case ComponentKind::complex_n: {
      const double a = 0.5 * (std::abs(chi.index()) + 1);
      terms = {{-kI, 1.0, a + it, 2}, {kI, 1.0, a - it, 2}};
      break;
    }
    default:
      break;
  }
  const PartialFractionSum sum = sum_partial_fractions(terms, 0);
  return {sum.value.real(), sum.tail_bound, sum.direct_terms};
}

double h_line_series(const CharacterComponent& chi, double t) {
  return h_line_series_estimate(chi, t).value;
}

double k_line_series(const CharacterComponent& chi, double t) {
  return k_line_series_estimate(chi, t).value;
}

double minimum_h(const CharacterComponent& chi) {
  require_archimedean(chi, "minimum_h");
  const double base = std::log(8.0 * kPi) + kEulerGamma;
  switch (chi.kind()) {
    case ComponentKind::even:
      return -base - kPi / 2.0;
    case ComponentKind::odd:
      return -base + kPi / 2.0;
    default:
      break;
  }
  const int n = std::abs(chi.index());
  double sum = 0.0;
  if (n % 2 == 0) {
    for (int j = 1; j <= n / 2; ++j) sum += 1.0 / (j - 0.5);
    return -2.0 * base + 2.0 * sum;
  }
  for (int j = 1; j <= (n - 1) / 2; ++j) sum += 1.0 / j;
  return -2.0 * base + 4.0 * std::log(2.0) + 2.0 * sum;
}

Supremum sup_abs_k(const CharacterComponent& chi) {
  switch (chi.kind()) {
    case ComponentKind::ramified:
      return {0.0, 0.0, 0.0};
    case ComponentKind::unramified: {
      const double q = chi.place().q();
      const double log_q = std::log(q);
      // theta = tau log q
      auto f = [&chi, log_q](double theta) {
        return std::abs(spectral_k(chi, critical_point(theta / log_q)));
      };
      const Extremum e = maximize(f, 0.0, 2.0 * kPi, 4096, true);
      return {e.value, e.arg, e.error};
    }
    default: {
      // |k| is even in t and decays like 1/t; the peak sits near t ~ (|N|+1)/2.
      const double t_max = 10.0 * (std::abs(chi.index()) + 2);
      auto f = [&chi](double t) { return std::abs(spectral_k(chi, critical_point(t))); };
      const Extremum e = maximize(f, 0.0, t_max, 4096, false);
      return {e.value, e.arg, e.error};
    }
  }
}

double quoted_k_bound(double q) {
  const double log_q = std::log(q);
  return 2.0 * log_q * log_q / std::sqrt(q);
}

}  // namespace localspec
