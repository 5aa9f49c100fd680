#include "localspec/padic.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "localspec/extrema.hpp"
#include "localspec/line_series.hpp"

namespace localspec {

namespace {

void require_q(double q, const char* fn) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw std::invalid_argument(std::string(fn) + ": q must exceed 1");
  }
}

ExactScalar rational(const mpz_class& re, const mpz_class& im, int a, int b) {
  return ExactScalar({mpq_class(re), mpq_class(im)}, a, b);
}

bool odd_kn(const BandKind& kind) {
  return kind.type() == BandKind::Type::KN && kind.order() % 2 == 1;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

BandKind BandKind::KN(int order) {
  if (order < 1) throw InvalidBandKind("BandKind::KN: order must be >= 1");
  return {Type::KN, order};
}

std::string BandKind::label() const {
  switch (type_) {
    case Type::A:
      return "A";
    case Type::H:
      return "H";
    case Type::K:
      return "K";
    case Type::KN:
      return "KN:" + std::to_string(order_);
  }
  return "?";
}

ExactScalar theta_value(const BandKind& kind, double q, int m) {
  require_q(q, "theta_value");
  if (m == 0) return {};
  // |y| = q^m > 1 picks up the factor R^{-2m}
  const int b = (m > 0) ? -2 * m : 0;
  switch (kind.type()) {
    case BandKind::Type::H:
      return rational(-1, 0, 1, b);
    case BandKind::Type::K:
      return rational(0, m, 2, b);
    default:
      throw InvalidBandKind("theta_value: kind must be H or K, got " + kind.label());
  }
}

ExactScalar band_coefficient(const BandKind& kind, double q, int m) {
  require_q(q, "band_coefficient");
  if (m == 0) return {};
  const int b = -std::abs(m);
  switch (kind.type()) {
    case BandKind::Type::H:
      return rational(-1, 0, 1, b);
    case BandKind::Type::K:
      return rational(0, m, 2, b);
    case BandKind::Type::KN: {
      mpz_class mn;
      mpz_pow_ui(mn.get_mpz_t(), mpz_class(m).get_mpz_t(),
                 static_cast<unsigned long>(kind.order()));
      return rational(-mn, 0, kind.order() + 1, b);
    }
    case BandKind::Type::A:
      break;
  }
  throw InvalidBandKind("band_coefficient: A is diagonal, not a band");
}

OperatorTruncation::OperatorTruncation(double q, int M) : q_(q), M_(M) {
  require_q(q, "OperatorTruncation");
  if (M < 1) throw std::invalid_argument("OperatorTruncation: M must be >= 1");
  entries_.resize(static_cast<std::size_t>(dim()) * static_cast<std::size_t>(dim()));
}

std::size_t OperatorTruncation::index(int j, int k) const {
  if (std::abs(j) > M_ || std::abs(k) > M_) {
    throw std::out_of_range("OperatorTruncation: index outside [-M, M]");
  }
  return static_cast<std::size_t>(j + M_) * static_cast<std::size_t>(dim()) +
         static_cast<std::size_t>(k + M_);
}

bool OperatorTruncation::is_toeplitz() const {
  for (int j = -M_; j < M_; ++j) {
    for (int k = -M_; k < M_; ++k) {
      if (!(at(j, k) == at(j + 1, k + 1))) return false;
    }
  }
  return true;
}

bool OperatorTruncation::is_hermitian() const {
  for (int j = -M_; j <= M_; ++j) {
    for (int k = j; k <= M_; ++k) {
      if (!(at(j, k) == at(k, j).conj())) return false;
    }
  }
  return true;
}

bool OperatorTruncation::interior_equal(const OperatorTruncation& other, int margin) const {
  if (other.M_ != M_ || other.q_ != q_) return false;
  const int lim = M_ - margin;
  for (int j = -lim; j <= lim; ++j) {
    for (int k = -lim; k <= lim; ++k) {
      if (!(at(j, k) == other.at(j, k))) return false;
    }
  }
  return true;
}

DenseMatrix OperatorTruncation::evaluate() const {
  const int n = dim();
  DenseMatrix out(n, n);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      out(r, c) = entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(c)]
                      .evaluate(q_);
    }
  }
  return out;
}

OperatorTruncation build_truncation(const BandKind& kind, double q, int M) {
  OperatorTruncation out(q, M);
  if (kind.type() == BandKind::Type::A) {
    for (int j = -M; j <= M; ++j) out.at(j, j) = rational(j, 0, 1, 0);
    return out;
  }
  std::vector<ExactScalar> band;
  band.reserve(static_cast<std::size_t>(4 * M + 1));
  for (int m = -2 * M; m <= 2 * M; ++m) band.push_back(band_coefficient(kind, q, m));
  for (int j = -M; j <= M; ++j) {
    for (int k = -M; k <= M; ++k) out.at(j, k) = band[static_cast<std::size_t>(j - k + 2 * M)];
  }
  return out;
}

OperatorTruncation bracket_with_A(const OperatorTruncation& x) {
  OperatorTruncation out(x.q(), x.M());
  const int M = x.M();
  for (int j = -M; j <= M; ++j) {
    for (int k = -M; k <= M; ++k) {
      if (j == k || x.at(j, k).is_zero()) continue;
      out.at(j, k) = rational(j - k, 0, 1, 0) * x.at(j, k);
    }
  }
  return out;
}

OperatorTruncation multiply(const OperatorTruncation& x, const OperatorTruncation& y) {
  if (x.M() != y.M() || x.q() != y.q()) {
    throw std::invalid_argument("multiply: truncations differ in q or M");
  }
  const int M = x.M();
  OperatorTruncation out(x.q(), M);
  for (int i = -M; i <= M; ++i) {
    for (int l = -M; l <= M; ++l) {
      const ExactScalar& a = x.at(i, l);
      if (a.is_zero()) continue;
      for (int k = -M; k <= M; ++k) {
        const ExactScalar& b = y.at(l, k);
        if (!b.is_zero()) out.at(i, k) += a * b;
      }
    }
  }
  return out;
}

OperatorTruncation add(const OperatorTruncation& x, const OperatorTruncation& y) {
  if (x.M() != y.M() || x.q() != y.q()) {
    throw std::invalid_argument("add: truncations differ in q or M");
  }
  OperatorTruncation out = x;
  for (int j = -x.M(); j <= x.M(); ++j) {
    for (int k = -x.M(); k <= x.M(); ++k) out.at(j, k) += y.at(j, k);
  }
  return out;
}

OperatorTruncation scale(const ExactScalar& c, const OperatorTruncation& x) {
  OperatorTruncation out(x.q(), x.M());
  for (int j = -x.M(); j <= x.M(); ++j) {
    for (int k = -x.M(); k <= x.M(); ++k) out.at(j, k) = c * x.at(j, k);
  }
  return out;
}

OperatorTruncation binomial_kn(double q, int N, int M) {
  if (N < 0 || N > 6) throw std::invalid_argument("binomial_kn: N must be in [0, 6]");
  const OperatorTruncation a = build_truncation(BandKind::A(), q, M);
  const OperatorTruncation h = build_truncation(BandKind::H(), q, M);

  std::vector<OperatorTruncation> a_pow;  // A^0 .. A^N
  OperatorTruncation identity(q, M);
  for (int j = -M; j <= M; ++j) identity.at(j, j) = ExactScalar::integer(1);
  a_pow.push_back(identity);
  for (int j = 1; j <= N; ++j) a_pow.push_back(multiply(a_pow.back(), a));

  OperatorTruncation sum(q, M);
  long binom = 1;  // C(N, j)
  for (int j = 0; j <= N; ++j) {
    const long sign = ((N - j) % 2 == 0) ? 1 : -1;
    const OperatorTruncation term = multiply(multiply(a_pow[j], h), a_pow[N - j]);
    sum = add(sum, scale(ExactScalar::integer(sign * binom), term));
    binom = binom * (N - j) / (j + 1);
  }
  return sum;
}

Complex symbol(const BandKind& kind, double q, double theta) {
  require_q(q, "symbol");
  const double log_q = std::log(q);
  const Complex w = std::polar(1.0 / std::sqrt(q), theta);
  switch (kind.type()) {
    case BandKind::Type::H:
      return -log_q * (w / (1.0 - w) + std::conj(w) / (1.0 - std::conj(w)));
    case BandKind::Type::K:
      return -2.0 * log_q * log_q * std::imag(w / ((1.0 - w) * (1.0 - w)));
    case BandKind::Type::KN: {
      const int n = kind.order();
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      return -std::pow(log_q, n + 1) *
             (polylog_negative(n, w) + sign * polylog_negative(n, std::conj(w)));
    }
    case BandKind::Type::A:
      break;
  }
  throw InvalidBandKind("symbol: A has no circle symbol");
}

Complex symbol_series(const BandKind& kind, double q, double theta, int terms) {
  Complex acc{0.0, 0.0};
  for (int m = terms; m >= 1; --m) {
    acc += band_coefficient(kind, q, m).evaluate(q) * std::polar(1.0, m * theta);
    acc += band_coefficient(kind, q, -m).evaluate(q) * std::polar(1.0, -m * theta);
  }
  return acc;
}

SymbolRange symbol_range(const BandKind& kind, double q) {
  auto real_symbol = [&kind, q, odd = odd_kn(kind)](double theta) {
    const Complex v = symbol(kind, q, theta);
    return odd ? v.imag() : v.real();  // -i * (i y) = y
  };
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const Extremum lo = minimize(real_symbol, 0.0, kTwoPi, 4096, true);
  const Extremum hi = maximize(real_symbol, 0.0, kTwoPi, 4096, true);
  return {lo.value, hi.value, lo.arg, hi.arg, std::max(lo.error, hi.error)};
}

OperatorTruncation inversion_conjugate(const OperatorTruncation& x) {
  OperatorTruncation out(x.q(), x.M());
  for (int j = -x.M(); j <= x.M(); ++j) {
    for (int k = -x.M(); k <= x.M(); ++k) out.at(j, k) = x.at(-j, -k);
  }
  return out;
}

ExtremeEigenvalues extreme_eigenvalues(const OperatorTruncation& x, double tol) {
  const DenseMatrix m = x.evaluate();
  const double defect = hermitian_defect(m);
  if (defect > 1e-12) {
    throw NonHermitian("extreme_eigenvalues: matrix is not Hermitian (defect " +
                       format_double(defect) + ")");
  }
  return lanczos_extremes(m, tol);
}

void write_csv(std::ostream& out, const OperatorTruncation& x) {
  out << "j,k,re,im\n";
  for (int j = -x.M(); j <= x.M(); ++j) {
    for (int k = -x.M(); k <= x.M(); ++k) {
      const Complex v = x.at(j, k).evaluate(x.q());
      out << j << ',' << k << ',' << format_double(v.real()) << ','
          << format_double(v.imag()) << '\n';
    }
  }
}

nlohmann::json to_json(const OperatorTruncation& x) {
  nlohmann::json entries = nlohmann::json::array();
  for (int j = -x.M(); j <= x.M(); ++j) {
    for (int k = -x.M(); k <= x.M(); ++k) {
      if (x.at(j, k).is_zero()) continue;
      entries.push_back({{"j", j}, {"k", k}, {"terms", x.at(j, k).to_json()}});
    }
  }
  return {{"q", format_double(x.q())}, {"M", x.M()}, {"entries", entries}};
}

}  // namespace localspec
