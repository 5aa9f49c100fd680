#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

#include "localspec/fft.hpp"
#include "localspec/mellin.hpp"
#include "test_support.hpp"

using namespace localspec;

namespace {

constexpr double kPi = std::numbers::pi;

const LineGrid kGrid(std::size_t{1} << 16, 64.0);

// pi^{-a/2} Gamma(a/2): the profile 2 int_0^inf r^{a-1} e^{-pi r^2} dr.
Complex gaussian_moment(Complex a) { return std::exp(-0.5 * a * std::log(kPi) + log_gamma(a / 2.0)); }

// 2 int_2^4 b(r) r^{-1/2 + i tau} dr by the trapezoid rule, which is
// spectrally accurate for the smooth compactly supported bump.
Complex bump_profile_quadrature(double tau) {
  const int n = 20000;
  const double h = 2.0 / n;
  Complex acc{0.0, 0.0};
  for (int i = 1; i < n; ++i) {
    const double r = 2.0 + i * h;
    acc += bump(r) * std::exp(Complex(-0.5, tau) * std::log(r));
  }
  return 2.0 * h * acc;
}

const ComponentProfile& profile(const MultiplicativeFunction& F, const CharacterComponent& chi) {
  const ComponentProfile* p = F.find(chi);
  REQUIRE(p != nullptr);
  return *p;
}

double profile_norm(const ComponentProfile& p) {
  double s = 0.0;
  for (const auto& v : p.values) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("fft matches a naive DFT", "[mellin][fft]") {
  testsupport::Sampler rng(71);
  for (std::size_t n : {1u, 12u, 64u, 97u}) {
    std::vector<Complex> x(n);
    for (auto& v : x) v = rng.complex_in(-1, 1, -1, 1);
    for (auto dir : {FftDirection::forward, FftDirection::backward}) {
      const double sign = dir == FftDirection::forward ? -1.0 : 1.0;
      std::vector<Complex> y = x;
      fft(y, dir);
      for (std::size_t j = 0; j < n; ++j) {
        Complex want{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
          want += x[k] * std::polar(1.0, sign * 2.0 * kPi * double(j * k % n) / double(n));
        }
        CHECK(std::abs(y[j] - want) < 1e-12 * double(n));
      }
    }
  }
}

TEST_CASE("grid validation", "[mellin]") {
  CHECK_THROWS_AS(LineGrid(1000, 64.0), std::invalid_argument);
  CHECK_THROWS_AS(LineGrid(2048, 64.0), std::invalid_argument);
  CHECK_THROWS_AS(LineGrid(4096, 0.0), std::invalid_argument);
  const LineGrid g(4096, 8.0);
  CHECK(g.point(0) == -8.0);
  CHECK(g.point(g.origin()) == 0.0);
  CHECK(g.point(4095) == 8.0 - 16.0 / 4096);
  CHECK_THROWS_AS(SampledLineFunction(g, std::vector<Complex>(10)), std::invalid_argument);
}

TEST_CASE("to_multiplicative separates parity", "[mellin]") {
  const auto suite = bump_suite(kGrid);
  const auto even = to_multiplicative(suite[0].f);
  CHECK(profile_norm(profile(even, CharacterComponent::odd())) <
        1e-12 * profile_norm(profile(even, CharacterComponent::even())));
  const auto odd = to_multiplicative(suite[1].f);
  CHECK(profile_norm(profile(odd, CharacterComponent::even())) <
        1e-12 * profile_norm(profile(odd, CharacterComponent::odd())));
  const auto mixed = to_multiplicative(suite[2].f);
  CHECK(profile_norm(profile(mixed, CharacterComponent::even())) > 0.1);
  CHECK(profile_norm(profile(mixed, CharacterComponent::odd())) > 0.1);
}

TEST_CASE("profile values against direct quadrature", "[mellin]") {
  const auto F = to_multiplicative(bump_suite(kGrid)[0].f);
  const ComponentProfile& p = profile(F, CharacterComponent::even());
  double peak = 0.0;
  for (const auto& v : p.values) peak = std::max(peak, std::abs(v));
  for (std::size_t j : {p.grid.n / 2, p.grid.n / 2 + 1, p.grid.n / 2 + 7, p.grid.n / 2 - 40,
                        p.grid.n / 2 + 150}) {
    const Complex want = bump_profile_quadrature(p.grid.tau(j));
    CHECK(std::abs(p.values[j] - want) < 1e-9 * peak);
  }
}

TEST_CASE("round trip", "[mellin][property]") {
  for (const auto& [name, f] : bump_suite(kGrid)) {
    CAPTURE(name);
    const auto F = to_multiplicative(f);
    CHECK(F.boundary_ratio() < 1e-10);
    const auto back = from_multiplicative(F, kGrid);
    CHECK(relative_l2(back, f) < 1e-8);
    // Plancherel for the unitary weight
    CHECK(std::abs(F.norm_squared() / (f.norm() * f.norm()) - 1.0) < 1e-8);
  }
}

TEST_CASE("from_multiplicative examples", "[mellin]") {
  const auto F = to_multiplicative(bump_suite(kGrid)[0].f);
  const LogGrid g = F.profiles()[0].grid;

  MultiplicativeFunction zero;
  zero.add({CharacterComponent::even(), g, std::vector<Complex>(g.n)});
  const auto z = from_multiplicative(zero, kGrid);
  for (const auto& v : z.values) CHECK(v == Complex(0.0, 0.0));

  // narrow Gaussian at tau0 inverts to a windowed character
  const double tau0 = 3.0;
  std::vector<Complex> values(g.n);
  for (std::size_t j = 0; j < g.n; ++j) values[j] = std::exp(-0.5 * std::pow(g.tau(j) - tau0, 2));
  MultiplicativeFunction delta;
  delta.add({CharacterComponent::even(), g, values});
  const auto f = from_multiplicative(delta, kGrid);
  const double c = std::sqrt(2.0 * kPi) / (4.0 * kPi);
  for (double y : {-17.0, -2.5, 0.25, 0.5, 1.0, 4.0, 9.0}) {
    const std::size_t k = kGrid.origin() + static_cast<std::size_t>(std::lround(y / kGrid.spacing()));
    const double r = std::abs(kGrid.point(k));
    const double x = std::log(r);
    const Complex want = c * std::exp(-0.5 * x * x) * std::exp(Complex(-0.5, -tau0) * x);
    CHECK(std::abs(f.values[k] - want) < 1e-10);
  }
}

TEST_CASE("apply_spectral A on an analytic profile", "[mellin]") {
  const LogGrid g = to_multiplicative(bump_suite(kGrid)[0].f).profiles()[0].grid;
  std::vector<Complex> values(g.n);
  for (std::size_t j = 0; j < g.n; ++j) values[j] = std::exp(-g.tau(j) * g.tau(j));
  MultiplicativeFunction F;
  F.add({CharacterComponent::even(), g, values});
  const auto AF = apply_spectral({SpectralKind::A}, F);
  const auto& out = profile(AF, CharacterComponent::even());
  for (std::size_t j = 0; j < g.n; ++j) {
    const double t = g.tau(j);
    CHECK(std::abs(out.values[j] - Complex(0.0, 2.0 * t * std::exp(-t * t))) < 1e-10);
  }
}

TEST_CASE("A consistency", "[mellin][property]") {
  for (const auto& [name, f] : bump_suite(kGrid)) {
    CAPTURE(name);
    const auto F = to_multiplicative(f);
    const auto spectral = apply_spectral({SpectralKind::A}, F);
    const auto direct = to_multiplicative(direct_apply(DirectKind::A, f));
    CHECK(relative_l2(direct, spectral) < 1e-6);
  }
}

TEST_CASE("spectral Fourier acts through the Gamma factor", "[mellin]") {
  // phi = y^2 e^{-pi y^2}; its transform is (1/2pi - x^2) e^{-pi x^2}.
  const auto phi = SampledLineFunction::sample(
      kGrid, [](double y) { return Complex(y * y * std::exp(-kPi * y * y)); });
  const auto F = to_multiplicative(phi);
  const auto& p = profile(F, CharacterComponent::even());
  const auto FF = apply_spectral({SpectralKind::Fourier}, F);
  const auto& q = profile(FF, CharacterComponent::even());
  double worst_phi = 0.0;
  double worst_psi = 0.0;
  for (std::size_t j = 1; j < p.grid.n; ++j) {
    const double t = p.grid.tau(j);
    if (std::abs(t) > 60.0) continue;
    const Complex want_phi = gaussian_moment(Complex(2.5, t));
    const Complex want_psi = gaussian_moment(Complex(0.5, t)) / (2.0 * kPi) - want_phi;
    worst_phi = std::max(worst_phi, std::abs(p.values[j] - want_phi));
    worst_psi = std::max(worst_psi, std::abs(q.values[j] - want_psi));
  }
  CHECK(worst_phi < 1e-9);
  CHECK(worst_psi < 1e-9);
  CHECK(profile_norm(profile(F, CharacterComponent::odd())) < 1e-12);
}

TEST_CASE("Fourier square is parity and Fourier is unitary", "[mellin][property]") {
  for (const auto& [name, f] : bump_suite(kGrid)) {
    CAPTURE(name);
    const auto F = to_multiplicative(f);
    const auto F1 = apply_spectral({SpectralKind::Fourier}, F);
    const auto F2 = apply_spectral({SpectralKind::Fourier}, F1);
    MultiplicativeFunction parity;
    for (const auto& p : F.profiles()) {
      ComponentProfile q = p;
      for (auto& v : q.values) v *= p.component.value_at_minus_one();
      parity.add(std::move(q));
    }
    CHECK(relative_l2(F2, parity) < 1e-8);
    CHECK(std::abs(std::sqrt(F1.norm_squared() / F.norm_squared()) - 1.0) < 1e-8);
  }
}

TEST_CASE("spectral multipliers", "[mellin]") {
  const auto F = to_multiplicative(bump_suite(kGrid)[2].f);
  const auto KF = apply_spectral({SpectralKind::K}, F);
  for (const auto& p : KF.profiles()) {
    const std::size_t mid = p.grid.n / 2;
    CHECK(p.grid.tau(mid) == 0.0);
    CHECK(std::abs(p.values[mid]) < 1e-15);
  }
  const auto K1 = apply_spectral({SpectralKind::KN, 1}, F);
  for (const auto& p : K1.profiles()) {
    const auto& k = profile(KF, p.component);
    for (std::size_t j = 0; j < p.grid.n; j += 97) {
      CHECK(std::abs(p.values[j] - Complex(0.0, 1.0) * k.values[j]) < 1e-14);
    }
  }
  CHECK(parse_spectral_op("KN:3").order == 3);
  CHECK_THROWS_AS(parse_spectral_op("KN:0"), UnsupportedKind);
  CHECK_THROWS_AS(parse_spectral_op("KN:x"), UnsupportedKind);
  CHECK_THROWS_AS(parse_spectral_op("B"), UnsupportedKind);
  CHECK_THROWS_AS(parse_direct_kind("Fourier"), UnsupportedKind);
}

TEST_CASE("direct and spectral paths agree", "[mellin][property]") {
  for (const auto& [name, f] : bump_suite(kGrid)) {
    CAPTURE(name);
    const auto F = to_multiplicative(f);
    const auto hs = from_multiplicative(apply_spectral({SpectralKind::H}, F), kGrid);
    const auto ks = from_multiplicative(apply_spectral({SpectralKind::K}, F), kGrid);
    const double rh = relative_l2(direct_apply(DirectKind::H, f), hs, true);
    const double rk = relative_l2(direct_apply(DirectKind::K, f), ks, true);
    CAPTURE(rh, rk);
    CHECK(rh < 5e-3);
    CHECK(rk < 1e-2);
  }
}

TEST_CASE("direct_apply basics", "[mellin]") {
  const auto f = bump_suite(kGrid)[0].f;
  const auto a = direct_apply(DirectKind::A, f);
  for (std::size_t k = 0; k < kGrid.n(); ++k) {
    if (f.values[k] == Complex(0.0, 0.0)) CHECK(a.values[k] == Complex(0.0, 0.0));
  }
  // B is self-adjoint: <Bf, g> = <f, Bg>
  const auto g = bump_suite(kGrid)[2].f;
  const auto bf = direct_apply(DirectKind::B, f);
  const auto bg = direct_apply(DirectKind::B, g);
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  for (std::size_t k = 0; k < kGrid.n(); ++k) {
    lhs += std::conj(bf.values[k]) * g.values[k];
    rhs += std::conj(f.values[k]) * bg.values[k];
  }
  CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(lhs));

  const auto gauss = SampledLineFunction::sample(
      kGrid, [](double y) { return Complex(std::exp(-kPi * y * y)); });
  CHECK_THROWS_AS(direct_apply(DirectKind::K, gauss), std::invalid_argument);
  CHECK_THROWS_AS(direct_apply(DirectKind::B, f, {3}), std::invalid_argument);
}

TEST_CASE("decay bound", "[mellin]") {
  const auto f = bump_suite(kGrid)[0].f;
  const double c = decay_bound(f);
  CHECK(std::isfinite(c));
  CHECK(c > 0.0);
  const auto b = direct_apply(DirectKind::B, f);
  for (double y : {16.0, 32.0, 48.0}) {
    const std::size_t k = kGrid.origin() + static_cast<std::size_t>(y / kGrid.spacing());
    CHECK(std::abs(b.values[k]) <= 1.5 * c / y);
  }
  const SampledLineFunction zero(kGrid, std::vector<Complex>(kGrid.n()));
  CHECK(decay_bound(zero) == 0.0);
  SampledLineFunction twice = f;
  for (auto& v : twice.values) v *= 2.0;
  CHECK(decay_bound(twice) == 2.0 * c);

  const LineGrid wide(std::size_t{1} << 17, 128.0);
  const double c2 = decay_bound(bump_suite(wide)[0].f);
  CHECK(c2 / c < 1.5);
  CHECK(c / c2 < 1.5);
}

TEST_CASE("leakage is reported", "[mellin]") {
  const auto wide = SampledLineFunction::sample(
      kGrid, [](double y) { return Complex(std::exp(-0.001 * y * y)); });
  CHECK_THROWS_AS(to_multiplicative(wide), LeakageError);

  // f(0) != 0 gives a profile that does not decay in tau
  const auto at_zero = SampledLineFunction::sample(
      kGrid, [](double y) { return Complex(std::exp(-kPi * y * y)); });
  CHECK_THROWS_AS(to_multiplicative(at_zero), LeakageError);

  const LogGrid g = to_multiplicative(bump_suite(kGrid)[0].f).profiles()[0].grid;
  MultiplicativeFunction flat;
  flat.add({CharacterComponent::even(), g, std::vector<Complex>(g.n, Complex(1.0, 0.0))});
  CHECK_THROWS_AS(apply_spectral({SpectralKind::H}, flat), LeakageError);
  CHECK_THROWS_AS(flat.add({CharacterComponent::even(), g, std::vector<Complex>(g.n)}),
                  std::invalid_argument);
}

TEST_CASE("csv round trip", "[mellin]") {
  const auto f = bump_suite(kGrid)[2].f;
  std::stringstream s;
  write_csv(s, f);
  std::string header;
  std::getline(std::istringstream(s.str()), header);
  CHECK(header == R"({"Y":64.0,"n":65536})");
  const auto back = read_line_csv(s);
  CHECK(back.values == f.values);

  const auto F = to_multiplicative(f);
  std::stringstream t;
  write_csv(t, F.profiles()[1]);
  const auto p = read_profile_csv(t);
  CHECK(p.component == CharacterComponent::odd());
  CHECK(p.grid == F.profiles()[1].grid);
  CHECK(p.values == F.profiles()[1].values);

  std::istringstream bad("{\"n\":4096,\"Y\":8}\nindex,re,im\n0,1,2\n");
  CHECK_THROWS_AS(read_line_csv(bad), std::invalid_argument);
}
