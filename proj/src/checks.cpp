#include "localspec/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "localspec/gamma_spectral.hpp"
#include "localspec/mellin.hpp"
#include "localspec/padic.hpp"

namespace localspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void tolerance(int criterion, std::string name, double measured, double tol) {
    out_.push_back({suite_, criterion, std::move(name), CheckKind::tolerance, measured, tol,
                    measured <= tol});
  }
  void exact(int criterion, std::string name, long mismatches) {
    out_.push_back({suite_, criterion, std::move(name), CheckKind::exact,
                    static_cast<double>(mismatches), 0.0, mismatches == 0});
  }
  void report(int criterion, std::string name, double value) {
    out_.push_back({suite_, criterion, std::move(name), CheckKind::report, value, 0.0, true});
  }
  // a boolean property, recorded as 0/1 mismatches
  void holds(int criterion, std::string name, bool ok) { exact(criterion, std::move(name), !ok); }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckResult> out_;
};

class Points {
 public:
  explicit Points(std::uint64_t seed) : rng_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  Complex strip(double re_lo, double re_hi, double im) {
    return {uniform(re_lo, re_hi), uniform(-im, im)};
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<double> grid(double a, double b, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return out;
}

double rel(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

std::vector<CharacterComponent> gamma_components() {
  std::vector<CharacterComponent> out{CharacterComponent::even(), CharacterComponent::odd()};
  for (int n = -6; n <= 6; ++n) out.push_back(CharacterComponent::complex(n));
  for (double q : {2.0, 3.0, 5.0, 7.0, 101.0}) out.push_back(CharacterComponent::unramified(q));
  return out;
}

std::vector<CharacterComponent> archimedean(int max_n) {
  std::vector<CharacterComponent> out{CharacterComponent::even(), CharacterComponent::odd()};
  for (int n = 0; n <= max_n; ++n) out.push_back(CharacterComponent::complex(n));
  return out;
}

std::vector<CheckResult> specfun_suite() {
  Recorder r("specfun");
  const double closed = -(kEulerGamma + kPi / 2.0 + 3.0 * std::log(2.0));
  r.tolerance(1, "digamma(1/4) closed form", std::abs(digamma(0.25) - closed), 1e-12);

  Points pts(1001);
  double rec = 0.0;
  double conj = 0.0;
  double fd = 0.0;
  double refl = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Complex s = pts.strip(0.05, 20.0, 50.0);
    rec = std::max(rec, rel(digamma(s + 1.0) - digamma(s), 1.0 / s));
    conj = std::max(conj, rel(digamma(std::conj(s)), std::conj(digamma(s))));
    const double h = 1e-4;
    fd = std::max(fd, rel((digamma(s + h) - digamma(s - h)) / (2.0 * h), polygamma(1, s)));
    // log Gamma(s) + log Gamma(1 - s) = log(pi / sin(pi s)) mod 2 pi i
    const Complex z = s - std::floor(s.real()) + 0.3;
    if (std::abs(z.imag()) < 20.0) {
      const Complex lhs = std::exp(log_gamma(z) + log_gamma(1.0 - z));
      refl = std::max(refl, rel(lhs, kPi / std::sin(kPi * z)));
    }
  }
  r.tolerance(1, "digamma recurrence, 200 points", rec, 1e-12);
  r.tolerance(1, "digamma conjugation, 200 points", conj, 1e-13);
  r.tolerance(1, "finite difference vs polygamma(1), h=1e-4", fd, 1e-6);
  r.tolerance(1, "log_gamma reflection", refl, 1e-10);

  double diff = 0.0;
  for (int n = 1; n <= 5; ++n) {
    double fact = 1.0;
    for (int m = 2; m <= n; ++m) fact *= m;
    for (int i = 0; i < 40; ++i) {
      const Complex s = pts.strip(0.5, 20.0, 50.0);
      const Complex want = ((n % 2 == 0) ? 1.0 : -1.0) * fact / std::pow(s, n + 1);
      diff = std::max(diff, rel(polygamma(n, s + 1.0) - polygamma(n, s), want));
    }
  }
  r.tolerance(1, "polygamma recurrence, n <= 5", diff, 1e-11);
  r.tolerance(1, "polygamma(1,1) = pi^2/6", std::abs(polygamma(1, 1.0) - kPi * kPi / 6.0),
              1e-11);
  return r.take();
}

std::vector<CheckResult> gamma_suite() {
  Recorder r("gamma");
  Points pts(2002);

  double fe = 0.0;
  for (const auto& chi : gamma_components()) {
    for (int i = 0; i < 100; ++i) {
      const Complex s = pts.strip(0.01, 0.99, 40.0);
      const Complex prod = gamma_factor(chi, s) * gamma_factor(chi.inverse(), 1.0 - s);
      fe = std::max(fe, std::abs(prod - chi.value_at_minus_one()));
    }
  }
  r.tolerance(2, "functional equation, 100 points x components", fe, 1e-10);

  double unit = 0.0;
  for (const auto& chi : gamma_components()) {
    for (double t : grid(-50.0, 50.0, 1001)) {
      unit = std::max(unit, std::abs(std::abs(gamma_factor(chi, critical_point(t))) - 1.0));
    }
  }
  r.tolerance(2, "|Gamma| = 1 on the critical line, t in [-50, 50]", unit, 1e-10);

  double period = 0.0;
  for (double q : {2.0, 3.0, 5.0, 7.0, 101.0}) {
    const auto chi = CharacterComponent::unramified(q);
    const Complex shift{0.0, 2.0 * kPi / std::log(q)};
    for (int i = 0; i < 50; ++i) {
      const Complex s = pts.strip(0.05, 0.95, 10.0);
      period = std::max(period, std::abs(gamma_factor(chi, s + shift) - gamma_factor(chi, s)));
    }
  }
  r.tolerance(2, "finite-place periodicity 2 pi i / log q", period, 1e-10);

  const double base = std::log(8.0 * kPi) + kEulerGamma;
  r.tolerance(3, "mu_+ = -(log 8pi + gamma) - pi/2",
              std::abs(spectral_h(CharacterComponent::even(), 0.5) - (-base - kPi / 2.0)), 1e-12);
  r.tolerance(3, "mu_- = -(log 8pi + gamma) + pi/2",
              std::abs(spectral_h(CharacterComponent::odd(), 0.5) - (-base + kPi / 2.0)), 1e-12);
  r.tolerance(3, "mu_0 = -2(log 8pi + gamma)",
              std::abs(spectral_h(CharacterComponent::complex(0), 0.5) - (-2.0 * base)), 1e-12);
  r.tolerance(3, "mu_1 = mu_0 + 4 log 2",
              std::abs(spectral_h(CharacterComponent::complex(1), 0.5) -
                       (-2.0 * base + 4.0 * std::log(2.0))),
              1e-12);
  double mu_rest = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const auto chi = CharacterComponent::complex(n);
    mu_rest = std::max(mu_rest, std::abs(spectral_h(chi, 0.5) - minimum_h(chi)));
  }
  r.tolerance(3, "mu_N closed forms, 2 <= N <= 12", mu_rest, 1e-12);

  double even_defect = 0.0;
  double monotone = 0.0;
  double below = 0.0;
  for (const auto& chi : archimedean(8)) {
    const double mu = minimum_h(chi);
    double prev = -INFINITY;
    for (double t : grid(0.0, 100.0, 2001)) {
      const double h = spectral_h(chi, critical_point(t)).real();
      even_defect = std::max(even_defect, std::abs(h - spectral_h(chi, critical_point(-t)).real()));
      monotone = std::max(monotone, prev - h);
      below = std::max(below, mu - h);
      prev = h;
    }
  }
  r.tolerance(3, "h even on the critical line", even_defect, 1e-12);
  r.tolerance(3, "h nondecreasing for t >= 0 (largest drop)", std::max(monotone, 0.0), 1e-13);
  r.tolerance(3, "h >= mu on the grid (largest shortfall)", std::max(below, 0.0), 1e-12);

  double k_imag = 0.0;
  double k_odd = 0.0;
  for (const auto& chi : gamma_components()) {
    for (double t : grid(-40.0, 40.0, 801)) {
      const Complex k = spectral_k(chi, critical_point(t));
      k_imag = std::max(k_imag, std::abs(k.imag()));
      k_odd = std::max(k_odd, std::abs(k + spectral_k(chi, critical_point(-t))));
    }
  }
  r.tolerance(4, "k real on the critical line", k_imag, 1e-12);
  r.tolerance(4, "k odd on the critical line", k_odd, 1e-12);

  // t |k| tends to 1 at the real place and to 2 at the complex place
  double tk = 0.0;
  for (const auto& chi : archimedean(6)) {
    const double limit = chi.place().kind() == PlaceKind::real ? 1.0 : 2.0;
    for (int i = 0; i <= 600; ++i) {
      const double t = 10.0 * std::pow(1000.0, i / 600.0);
      tk = std::max(tk, t * std::abs(spectral_k(chi, critical_point(t))) / limit);
    }
  }
  r.tolerance(4, "sup t |k(1/2+it)| / limit on [10, 1e4]", tk, 1.1);
  r.tolerance(4, "|k_+(1/2 + 1000 i)|",
              std::abs(spectral_k(CharacterComponent::even(), critical_point(1000.0))), 5e-3);

  double dominance = 0.0;
  for (int n = 0; n <= 6; ++n) {
    for (double t : grid(-60.0, 60.0, 1201)) {
      const Complex s = critical_point(t);
      dominance = std::max(dominance, std::abs(spectral_k(CharacterComponent::complex(n + 2), s)) -
                                          std::abs(spectral_k(CharacterComponent::complex(n), s)));
    }
  }
  r.tolerance(4, "|k_{N+2}| <= |k_N|, N <= 6 (largest excess)", std::max(dominance, 0.0), 1e-15);

  long unbounded = 0;
  for (const auto& chi : gamma_components()) {
    const Supremum sup = sup_abs_k(chi);
    if (!std::isfinite(sup.value) || !(sup.error <= 1e-8)) ++unbounded;
  }
  r.exact(4, "sup |k| finite for every tested component", unbounded);
  r.report(4, "sup |k_+| on the critical line", sup_abs_k(CharacterComponent::even()).value);

  double series = 0.0;
  for (const auto& chi : archimedean(8)) {
    for (double t : grid(-60.0, 60.0, 121)) {
      const Complex s = critical_point(t);
      series = std::max(series, std::abs(h_line_series(chi, t) - spectral_h(chi, s).real()));
      series = std::max(series, std::abs(k_line_series(chi, t) - spectral_k(chi, s).real()));
    }
  }
  r.tolerance(4, "critical-line series vs polygamma path", series, 1e-8);

  long nonzero = 0;
  for (double q : {2.0, 3.0, 5.0, 7.0}) {
    const auto chi = CharacterComponent::ramified(q);
    for (int i = 0; i < 20; ++i) {
      const Complex s = pts.strip(-3.0, 4.0, 30.0);
      if (spectral_k(chi, s) != Complex(0.0, 0.0)) ++nonzero;
      for (int n = 1; n <= 6; ++n) {
        if (spectral_kn(chi, n, s) != Complex(0.0, 0.0)) ++nonzero;
      }
    }
  }
  r.exact(8, "ramified spectral_k and spectral_kn are exactly 0", nonzero);
  return r.take();
}

std::vector<CheckResult> padic_suite() {
  Recorder r("padic");
  const ExactScalar minus_i({0, -1});
  const ExactScalar minus_one = ExactScalar::integer(-1);

  long formula = 0;
  long bracket = 0;
  for (double q : {2.0, 3.0, 5.0}) {
    const auto h = build_truncation(BandKind::H(), q, 20);
    const auto k1 = bracket_with_A(h);
    for (int m = -20; m <= 20; ++m) {
      // K_{jk} = -i L^2 (k - j) R^{-|k-j|}, here with k - j = -m
      const ExactScalar want({0, mpq_class(m)}, 2, -std::abs(m));
      const ExactScalar got = band_coefficient(BandKind::K(), q, m);
      if (!(got == want)) ++formula;
      const int j = (m >= 0) ? 0 : m + 20;
      const int k = j - m;
      if (std::abs(j) <= 20 && std::abs(k) <= 20 && !(minus_i * k1.at(j, k) == got)) ++bracket;
    }
  }
  r.exact(5, "band_coefficient(K) equals the K_jk formula, q in {2,3,5}, |m| <= 20", formula);
  r.exact(5, "band_coefficient(K) equals -i [A, H], q in {2,3,5}, |m| <= 20", bracket);

  long binomial = 0;
  for (int n = 1; n <= 4; ++n) {
    for (double q : {2.0, 3.0}) {
      if (!binomial_kn(q, n, 32).interior_equal(build_truncation(BandKind::KN(n), q, 32), n)) {
        ++binomial;
      }
    }
  }
  r.exact(5, "binomial K_N interior equals build(K_N), N <= 4, M = 32", binomial);

  long iterated = 0;
  long inversion = 0;
  long toeplitz = 0;
  for (double q : {2.0, 3.0, 5.0}) {
    const int M = 12;
    const auto h = build_truncation(BandKind::H(), q, M);
    const auto k = build_truncation(BandKind::K(), q, M);
    if (!(inversion_conjugate(h) == h)) ++inversion;
    if (!(inversion_conjugate(k) == scale(minus_one, k))) ++inversion;
    if (!h.is_toeplitz() || !k.is_toeplitz()) ++toeplitz;
    auto it = h;
    for (int n = 1; n <= 6; ++n) {
      it = bracket_with_A(it);
      const auto kn = build_truncation(BandKind::KN(n), q, M);
      if (!(it == kn)) ++iterated;
      if (!kn.is_toeplitz()) ++toeplitz;
      if (!(inversion_conjugate(kn) == (n % 2 == 0 ? kn : scale(minus_one, kn)))) ++inversion;
    }
  }
  r.exact(5, "iterated [A, .] on H equals build(K_N), N <= 6", iterated);
  r.exact(5, "inversion: J H J = H, J K J = -K, J K_N J = (-1)^N K_N", inversion);
  r.exact(5, "H, K, K_N truncations exactly Toeplitz", toeplitz);

  double series = 0.0;
  for (double q : {2.0, 3.0, 5.0}) {
    for (const auto& kind : {BandKind::H(), BandKind::K(), BandKind::KN(2), BandKind::KN(3)}) {
      for (int i = 0; i < 64; ++i) {
        const double theta = 2.0 * kPi * (i + 0.5) / 64.0;
        const Complex closed = symbol(kind, q, theta);
        series = std::max(series, rel(symbol_series(kind, q, theta, 200), closed));
      }
    }
  }
  r.tolerance(6, "band Fourier series (|m| <= 200) vs closed-form symbol", series, 1e-10);

  double line = 0.0;
  for (double q : {2.0, 3.0, 5.0, 7.0}) {
    const auto chi = CharacterComponent::unramified(q);
    for (double tau : grid(-5.0, 5.0, 101)) {
      line = std::max(line, std::abs(symbol(BandKind::K(), q, tau * std::log(q)) -
                                     spectral_k(chi, critical_point(tau))));
    }
  }
  r.tolerance(6, "symbol(K, q, tau log q) vs spectral_k(1/2 + i tau)", line, 1e-10);

  const SymbolRange kr = symbol_range(BandKind::K(), 2.0);
  const SymbolRange hr = symbol_range(BandKind::H(), 3.0);
  double outside = 0.0;
  long szego = 0;
  double prev_gap = INFINITY;
  for (int M : {32, 64, 128, 256}) {
    const auto e = extreme_eigenvalues(build_truncation(BandKind::K(), 2.0, M), 1e-12);
    outside = std::max({outside, kr.min - e.min, e.max - kr.max});
    const double gap = kr.max - e.max;
    if (!(gap < prev_gap)) ++szego;
    prev_gap = gap;
    if (M == 256) r.report(6, "K, q=2, M=256: max eigenvalue", e.max);
  }
  const auto eh = extreme_eigenvalues(build_truncation(BandKind::H(), 3.0, 256), 1e-12);
  outside = std::max({outside, hr.min - eh.min, eh.max - hr.max});
  r.tolerance(6, "M=256 extreme eigenvalues inside the symbol range (K q=2, H q=3)",
              std::max(outside, 0.0), 1e-8);
  r.exact(6, "K, q=2: symbol max minus lambda_max decreasing over M = 32..256", szego);
  r.report(6, "K, q=2: symbol max", kr.max);
  r.tolerance(6, "symbol range error estimate", std::max(kr.error, hr.error), 1e-8);

  const SymbolRange big = symbol_range(BandKind::K(), 1e4);
  r.tolerance(6, "q=1e4: |sup k / (2 (log q)^2 / sqrt q) - 1|",
              std::abs(big.max / quoted_k_bound(1e4) - 1.0), 0.01);
  for (double q : {2.0, 3.0, 5.0, 101.0}) {
    r.report(6, "q=" + std::to_string(static_cast<int>(q)) + ": sup k / (2 (log q)^2 / sqrt q)",
             symbol_range(BandKind::K(), q).max / quoted_k_bound(q));
  }
  return r.take();
}

std::vector<CheckResult> mellin_suite() {
  Recorder r("mellin");
  const LineGrid grid(std::size_t{1} << 16, 64.0);
  double round_trip = 0.0;
  double a_cons = 0.0;
  double parity = 0.0;
  double unitary = 0.0;
  for (const auto& [name, f] : bump_suite(grid)) {
    const auto F = to_multiplicative(f);
    round_trip = std::max(round_trip, relative_l2(from_multiplicative(F, grid), f));
    a_cons = std::max(a_cons, relative_l2(to_multiplicative(direct_apply(DirectKind::A, f)),
                                          apply_spectral({SpectralKind::A}, F)));
    const auto F1 = apply_spectral({SpectralKind::Fourier}, F);
    const auto F2 = apply_spectral({SpectralKind::Fourier}, F1);
    MultiplicativeFunction signed_f;
    for (const auto& p : F.profiles()) {
      ComponentProfile q = p;
      for (auto& v : q.values) v *= p.component.value_at_minus_one();
      signed_f.add(std::move(q));
    }
    parity = std::max(parity, relative_l2(F2, signed_f));
    unitary = std::max(unitary, std::abs(std::sqrt(F1.norm_squared() / F.norm_squared()) - 1.0));

    const auto hs = from_multiplicative(apply_spectral({SpectralKind::H}, F), grid);
    const auto ks = from_multiplicative(apply_spectral({SpectralKind::K}, F), grid);
    r.tolerance(7, "H direct vs spectral, " + name + " bump",
                relative_l2(direct_apply(DirectKind::H, f), hs, true), 5e-3);
    r.tolerance(7, "K direct vs spectral, " + name + " bump",
                relative_l2(direct_apply(DirectKind::K, f), ks, true), 1e-2);
  }
  r.tolerance(7, "round trip, three bumps", round_trip, 1e-8);
  r.tolerance(7, "A consistency, three bumps", a_cons, 1e-6);
  r.tolerance(7, "Fourier twice equals parity", parity, 1e-8);
  r.tolerance(7, "spectral Fourier unitary", unitary, 1e-8);

  const double c64 = decay_bound(bump_suite(grid)[0].f);
  const LineGrid wide(std::size_t{1} << 17, 128.0);
  const double c128 = decay_bound(bump_suite(wide)[0].f);
  r.holds(7, "decay bound finite and positive", std::isfinite(c64) && c64 > 0.0);
  r.tolerance(7, "decay bound ratio under Y doubling (max of both ways)",
              std::max(c64 / c128, c128 / c64), 1.5);
  r.report(7, "decay bound, even bump, Y = 64", c64);
  return r.take();
}

}  // namespace

std::vector<std::string> suite_names() { return {"specfun", "gamma", "padic", "mellin"}; }

std::vector<CheckResult> run_suite(const std::string& suite) {
  static const std::vector<std::pair<std::string, std::function<std::vector<CheckResult>()>>>
      suites{{"specfun", specfun_suite},
             {"gamma", gamma_suite},
             {"padic", padic_suite},
             {"mellin", mellin_suite}};
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [name, fn] : suites) {
    if (suite == "all" || suite == name) {
      found = true;
      auto part = fn();
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  if (!found) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

std::string status_label(const CheckResult& r) {
  switch (r.kind) {
    case CheckKind::report:
      return "report";
    case CheckKind::exact:
      return r.passed ? "exact" : "FAIL";
    case CheckKind::tolerance:
      break;
  }
  return r.passed ? "pass" : "FAIL";
}

}  // namespace localspec
