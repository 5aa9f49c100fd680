#include "localspec/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <span>
#include <sstream>

#include <json.hpp>

#include "localspec/fft.hpp"
#include "localspec/kernels.hpp"

namespace localspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLeakage = 1e-10;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

double sign_alternate(std::size_t k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// Local Lagrange interpolation of samples v_k at x0 + k h (zero outside).
Complex lagrange(std::span<const Complex> v, double x0, double h, double x, int order) {
  const double pos = (x - x0) / h;
  const auto size = static_cast<double>(v.size());
  if (!(pos > -order) || !(pos < size + order)) return {0.0, 0.0};
  const long base = static_cast<long>(std::floor(pos)) - order / 2 + 1;
  Complex acc{0.0, 0.0};
  for (int j = 0; j < order; ++j) {
    const long idx = base + j;
    if (idx < 0 || idx >= static_cast<long>(v.size())) continue;
    double w = 1.0;
    for (int l = 0; l < order; ++l) {
      if (l != j) w *= (pos - static_cast<double>(base + l)) / static_cast<double>(j - l);
    }
    acc += w * v[static_cast<std::size_t>(idx)];
  }
  return acc;
}

LogGrid make_log_grid(const LineGrid& line, const MellinOptions& opts) {
  if (!is_power_of_two(opts.log_points) || opts.log_points < 16) {
    throw std::invalid_argument("MellinOptions: log_points must be a power of two >= 16");
  }
  if (opts.interp_order < 2 || opts.interp_order % 2 != 0) {
    throw std::invalid_argument("MellinOptions: interp_order must be even and >= 2");
  }
  const double x_max = std::log(line.Y()) + opts.x_margin;
  return {opts.log_points, x_max - opts.x_span,
          opts.x_span / static_cast<double>(opts.log_points)};
}

// F_j = 2 int g(x) e^{i tau_j x} dx on the log grid.
std::vector<Complex> forward_profile(std::vector<Complex> g, const LogGrid& grid) {
  for (std::size_t k = 0; k < grid.n; ++k) g[k] *= sign_alternate(k);
  fft(g, FftDirection::backward);
  for (std::size_t j = 0; j < grid.n; ++j) {
    g[j] *= 2.0 * grid.dx * std::polar(1.0, grid.tau(j) * grid.x_min);
  }
  return g;
}

// g(x_k) = (1 / 4 pi) int F(tau) e^{-i tau x_k} d tau.
std::vector<Complex> inverse_profile(std::vector<Complex> F, const LogGrid& grid) {
  for (std::size_t j = 0; j < grid.n; ++j) F[j] *= std::polar(1.0, -grid.tau(j) * grid.x_min);
  fft(F, FftDirection::forward);
  const double scale = 1.0 / (2.0 * static_cast<double>(grid.n) * grid.dx);
  for (std::size_t k = 0; k < grid.n; ++k) F[k] *= scale * sign_alternate(k);
  return F;
}

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* component_label(const CharacterComponent& chi) {
  return chi.kind() == ComponentKind::even ? "+" : "-";
}

std::vector<Complex> read_rows(std::istream& in, std::size_t n) {
  std::vector<Complex> values(n);
  std::vector<bool> seen(n, false);
  std::string line;
  if (!std::getline(in, line) || line != "index,re,im") {
    throw std::invalid_argument("csv: expected the row header 'index,re,im'");
  }
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c)) {
      throw std::invalid_argument("csv: malformed row '" + line + "'");
    }
    const std::size_t idx = std::stoul(a);
    if (idx >= n || seen[idx]) throw std::invalid_argument("csv: bad or repeated index");
    values[idx] = {std::stod(b), std::stod(c)};
    seen[idx] = true;
    ++count;
  }
  if (count != n) throw std::invalid_argument("csv: row count does not match header n");
  return values;
}

}  // namespace

LineGrid::LineGrid(std::size_t n, double Y) : n_(n), Y_(Y) {
  if (!is_power_of_two(n) || n < (std::size_t{1} << 12)) {
    throw std::invalid_argument("LineGrid: n must be a power of two >= 4096");
  }
  if (!(Y > 0.0) || !std::isfinite(Y)) throw std::invalid_argument("LineGrid: Y must be > 0");
}

SampledLineFunction::SampledLineFunction(LineGrid g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.n()) {
    throw std::invalid_argument("SampledLineFunction: value count does not match grid");
  }
  for (const auto& x : values) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw std::invalid_argument("SampledLineFunction: non-finite value");
    }
  }
}

double SampledLineFunction::norm() const {
  double s = 0.0;
  for (const auto& v : values) s += std::norm(v);
  return std::sqrt(s * grid.spacing());
}

double LogGrid::dtau() const { return 2.0 * kPi / (static_cast<double>(n) * dx); }

namespace {

double edge_abs(std::span<const Complex> values) {
  const std::size_t w = std::min<std::size_t>(4, values.size() / 2);
  double edge = 0.0;
  for (std::size_t i = 0; i < w; ++i) {
    edge = std::max({edge, std::abs(values[i]), std::abs(values[values.size() - 1 - i])});
  }
  return edge;
}

}  // namespace

double ComponentProfile::boundary_ratio() const {
  const double peak = max_abs(values);
  return peak == 0.0 ? 0.0 : edge_abs(values) / peak;
}

void MultiplicativeFunction::add(ComponentProfile profile) {
  const auto kind = profile.component.kind();
  if (kind != ComponentKind::even && kind != ComponentKind::odd) {
    throw std::invalid_argument("MultiplicativeFunction: only chi_+ and chi_- profiles");
  }
  if (profile.values.size() != profile.grid.n) {
    throw std::invalid_argument("MultiplicativeFunction: profile size does not match grid");
  }
  for (const auto& p : profiles_) {
    if (p.component == profile.component) {
      throw std::invalid_argument("MultiplicativeFunction: repeated component");
    }
    if (!(p.grid == profile.grid)) {
      throw std::invalid_argument("MultiplicativeFunction: profiles on different grids");
    }
  }
  profiles_.push_back(std::move(profile));
  std::sort(profiles_.begin(), profiles_.end(), [](const auto& a, const auto& b) {
    return a.component.kind() == ComponentKind::even && b.component.kind() != ComponentKind::even;
  });
}

const ComponentProfile* MultiplicativeFunction::find(const CharacterComponent& chi) const {
  for (const auto& p : profiles_) {
    if (p.component == chi) return &p;
  }
  return nullptr;
}

double MultiplicativeFunction::norm_squared() const {
  double s = 0.0;
  for (const auto& p : profiles_) {
    double t = 0.0;
    for (const auto& v : p.values) t += std::norm(v);
    s += t * p.grid.dtau();
  }
  return s / (4.0 * kPi);
}

double MultiplicativeFunction::boundary_ratio() const {
  double peak = 0.0;
  double edge = 0.0;
  for (const auto& p : profiles_) {
    peak = std::max(peak, max_abs(p.values));
    edge = std::max(edge, edge_abs(p.values));
  }
  return peak == 0.0 ? 0.0 : edge / peak;
}

MultiplicativeFunction to_multiplicative(const SampledLineFunction& f,
                                         const MellinOptions& opts) {
  const LineGrid& line = f.grid;
  const double peak = max_abs(f.values);
  double edge = 0.0;
  for (std::size_t k = 0; k < line.n(); ++k) {
    if (std::abs(line.point(k)) >= 0.9 * line.Y()) edge = std::max(edge, std::abs(f.values[k]));
  }
  if (peak > 0.0 && edge > kLeakage * peak) {
    throw LeakageError("to_multiplicative: f does not decay at the grid boundary");
  }

  const LogGrid grid = make_log_grid(line, opts);
  std::vector<std::size_t> idx(grid.n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<Complex> even(grid.n);
  std::vector<Complex> odd(grid.n);
  const std::span<const Complex> v(f.values);
  const double y0 = line.point(0);
  const double h = line.spacing();
  std::vector<std::pair<Complex, Complex>> split(grid.n);
  kernels::parallel::map_grid(std::span<const std::size_t>(idx),
                              std::span<std::pair<Complex, Complex>>(split),
                              [&](std::size_t k) {
                                const double x = grid.x(k);
                                const double u = std::exp(x);
                                const Complex plus = lagrange(v, y0, h, u, opts.interp_order);
                                const Complex minus = lagrange(v, y0, h, -u, opts.interp_order);
                                const double weight = std::exp(0.5 * x);
                                return std::pair{0.5 * (plus + minus) * weight,
                                                 0.5 * (plus - minus) * weight};
                              });
  for (std::size_t k = 0; k < grid.n; ++k) {
    even[k] = split[k].first;
    odd[k] = split[k].second;
  }

  MultiplicativeFunction out;
  out.add({CharacterComponent::even(), grid, forward_profile(std::move(even), grid)});
  out.add({CharacterComponent::odd(), grid, forward_profile(std::move(odd), grid)});
  if (out.boundary_ratio() > kLeakage) {
    throw LeakageError("to_multiplicative: profile does not decay at the tau boundary");
  }
  return out;
}

SampledLineFunction from_multiplicative(const MultiplicativeFunction& F, const LineGrid& grid,
                                        const MellinOptions& opts) {
  std::vector<Complex> even;
  std::vector<Complex> odd;
  LogGrid lg{};
  for (const auto& p : F.profiles()) {
    lg = p.grid;
    auto g = inverse_profile(p.values, p.grid);
    (p.component.kind() == ComponentKind::even ? even : odd) = std::move(g);
  }
  std::vector<Complex> out(grid.n(), Complex{0.0, 0.0});
  if (F.profiles().empty()) return {grid, std::move(out)};

  auto parts = [&](double r) {
    const double x = std::log(r);
    const double weight = std::exp(-0.5 * x);
    const Complex e = even.empty() ? Complex{}
                                   : weight * lagrange(even, lg.x_min, lg.dx, x,
                                                       opts.interp_order);
    const Complex o = odd.empty() ? Complex{}
                                  : weight * lagrange(odd, lg.x_min, lg.dx, x,
                                                      opts.interp_order);
    return std::pair{e, o};
  };

  std::vector<std::size_t> idx(grid.n());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  kernels::parallel::map_grid(std::span<const std::size_t>(idx), std::span<Complex>(out),
                              [&](std::size_t k) -> Complex {
                                const double y = grid.point(k);
                                if (y == 0.0) return {0.0, 0.0};
                                const auto [e, o] = parts(std::abs(y));
                                return y > 0.0 ? e + o : e - o;
                              });
  const double d = grid.spacing();
  out[grid.origin()] = (4.0 * parts(d).first - parts(2.0 * d).first) / 3.0;
  return {grid, std::move(out)};
}

SpectralOp parse_spectral_op(const std::string& name) {
  if (name == "A") return {SpectralKind::A};
  if (name == "Fourier" || name == "F") return {SpectralKind::Fourier};
  if (name == "H") return {SpectralKind::H};
  if (name == "K") return {SpectralKind::K};
  if (name.rfind("KN:", 0) == 0) {
    std::size_t used = 0;
    int order = 0;
    try {
      order = std::stoi(name.substr(3), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != name.size() - 3 || order < 1) {
      throw UnsupportedKind("spectral op: bad K_N order in '" + name + "'");
    }
    return {SpectralKind::KN, order};
  }
  throw UnsupportedKind("spectral op: unknown kind '" + name + "'");
}

MultiplicativeFunction apply_spectral(const SpectralOp& op, const MultiplicativeFunction& F) {
  if (F.boundary_ratio() > kLeakage) {
    throw LeakageError("apply_spectral: profile does not decay at the tau boundary");
  }
  MultiplicativeFunction out;
  for (const auto& p : F.profiles()) {
    const LogGrid& g = p.grid;
    std::vector<Complex> values(g.n);
    switch (op.kind) {
      case SpectralKind::A: {
        std::vector<Complex> x = inverse_profile(p.values, g);
        for (std::size_t k = 0; k < g.n; ++k) x[k] *= g.x(k);
        values = forward_profile(std::move(x), g);
        break;
      }
      case SpectralKind::Fourier: {
        // real place: conj chi = chi; tau_j -> -tau_j is j -> n - j
        for (std::size_t j = 1; j < g.n; ++j) {
          values[j] = gamma_factor(p.component, critical_point(g.tau(j))) * p.values[g.n - j];
        }
        values[0] = 0.0;
        break;
      }
      case SpectralKind::H:
      case SpectralKind::K:
      case SpectralKind::KN: {
        std::vector<double> taus(g.n);
        for (std::size_t j = 0; j < g.n; ++j) taus[j] = g.tau(j);
        const CharacterComponent chi = p.component;
        kernels::parallel::map_grid(std::span<const double>(taus), std::span<Complex>(values),
                                    [&](double tau) {
                                      const Complex s = critical_point(tau);
                                      if (op.kind == SpectralKind::H) return spectral_h(chi, s);
                                      if (op.kind == SpectralKind::K) return spectral_k(chi, s);
                                      return spectral_kn(chi, op.order, s);
                                    });
        for (std::size_t j = 0; j < g.n; ++j) values[j] *= p.values[j];
        break;
      }
    }
    out.add({p.component, g, std::move(values)});
  }
  return out;
}

DirectKind parse_direct_kind(const std::string& name) {
  if (name == "A") return DirectKind::A;
  if (name == "B") return DirectKind::B;
  if (name == "H") return DirectKind::H;
  if (name == "K") return DirectKind::K;
  throw UnsupportedKind("direct op: unsupported kind '" + name + "'");
}

namespace {

std::vector<Complex> apply_log_abs(const LineGrid& grid, std::span<const Complex> f) {
  std::vector<Complex> out(f.size());
  const double zero_bin = std::log(grid.spacing() / (2.0 * kPi));
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double y = grid.point(k);
    out[k] = f[k] * (y == 0.0 ? zero_bin : std::log(std::abs(y)));
  }
  return out;
}

std::vector<Complex> apply_b(const LineGrid& grid, std::span<const Complex> f, int padding) {
  if (padding < 1 || !is_power_of_two(static_cast<std::size_t>(padding))) {
    throw std::invalid_argument("direct_apply: padding must be a power of two >= 1");
  }
  const std::size_t n = grid.n();
  const std::size_t m = n * static_cast<std::size_t>(padding);
  const std::size_t offset = (m - n) / 2;
  const double dy = grid.spacing();
  const double dx = 1.0 / (static_cast<double>(m) * dy);

  std::vector<Complex> g(m, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) g[offset + k] = f[k] * sign_alternate(offset + k);
  // psi(x_l) = dy sum_k f_k e^{+2 pi i x_l y_k}
  fft(g, FftDirection::backward);
  const double zero_bin = std::log(dx / (2.0 * kPi));
  for (std::size_t l = 0; l < m; ++l) {
    const double x = (static_cast<double>(l) - static_cast<double>(m / 2)) * dx;
    const double lx = (l == m / 2) ? zero_bin : std::log(std::abs(x));
    // the (-1)^l from psi and the one feeding the inverse cancel
    g[l] *= dy * lx;
  }
  fft(g, FftDirection::forward);
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = dx * sign_alternate(offset + k) * g[offset + k];
  return out;
}

}  // namespace

SampledLineFunction direct_apply(DirectKind kind, const SampledLineFunction& f,
                                 const DirectOptions& opts) {
  const LineGrid& grid = f.grid;
  switch (kind) {
    case DirectKind::A:
      return {grid, apply_log_abs(grid, f.values)};
    case DirectKind::B:
      return {grid, apply_b(grid, f.values, opts.padding)};
    case DirectKind::H: {
      std::vector<Complex> a = apply_log_abs(grid, f.values);
      const std::vector<Complex> b = apply_b(grid, f.values, opts.padding);
      for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
      return {grid, std::move(a)};
    }
    case DirectKind::K: {
      const double peak = max_abs(f.values);
      for (std::size_t k = 0; k < grid.n(); ++k) {
        if (std::abs(grid.point(k)) <= 2.0 * grid.spacing() &&
            std::abs(f.values[k]) > 1e-14 * peak) {
          throw std::invalid_argument("direct_apply(K): f must vanish near the origin");
        }
      }
      const std::vector<Complex> ba = apply_b(grid, apply_log_abs(grid, f.values), opts.padding);
      const std::vector<Complex> ab = apply_log_abs(grid, apply_b(grid, f.values, opts.padding));
      std::vector<Complex> out(grid.n());
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = Complex(0.0, 1.0) * (ba[k] - ab[k]);
      return {grid, std::move(out)};
    }
  }
  throw UnsupportedKind("direct_apply: unsupported kind");
}

double decay_bound(const SampledLineFunction& f, const DirectOptions& opts) {
  const SampledLineFunction b = direct_apply(DirectKind::B, f, opts);
  const double Y = f.grid.Y();
  double sup = 0.0;
  for (std::size_t k = 0; k < f.grid.n(); ++k) {
    const double y = std::abs(f.grid.point(k));
    if (y >= 0.25 * Y && y <= 0.5 * Y) sup = std::max(sup, y * std::abs(b.values[k]));
  }
  return sup;
}

double relative_l2(const SampledLineFunction& a, const SampledLineFunction& b, bool punctured) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("relative_l2: grids differ");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (punctured && k == a.grid.origin()) continue;
    num += std::norm(a.values[k] - b.values[k]);
    den += std::norm(b.values[k]);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
  return std::sqrt(num / den);
}

double relative_l2(const MultiplicativeFunction& a, const MultiplicativeFunction& b) {
  double num = 0.0;
  double den = 0.0;
  auto accumulate = [&](const ComponentProfile* x, const ComponentProfile* y) {
    const std::size_t n = x ? x->values.size() : y->values.size();
    if (x && y && !(x->grid == y->grid)) throw std::invalid_argument("relative_l2: grids differ");
    for (std::size_t j = 0; j < n; ++j) {
      const Complex vx = x ? x->values[j] : Complex{};
      const Complex vy = y ? y->values[j] : Complex{};
      num += std::norm(vx - vy);
      den += std::norm(vy);
    }
  };
  for (const auto chi : {CharacterComponent::even(), CharacterComponent::odd()}) {
    const ComponentProfile* x = a.find(chi);
    const ComponentProfile* y = b.find(chi);
    if (x || y) accumulate(x, y);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
  return std::sqrt(num / den);
}

double bump(double r, double center, double width) {
  const double u = (r - center) / width;
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - u * u));
}

std::vector<NamedFunction> bump_suite(const LineGrid& grid) {
  std::vector<NamedFunction> out;
  out.push_back({"even", SampledLineFunction::sample(
                             grid, [](double y) { return Complex(bump(std::abs(y))); })});
  out.push_back({"odd", SampledLineFunction::sample(grid, [](double y) {
                   return Complex((y > 0.0) - (y < 0.0)) * bump(std::abs(y));
                 })});
  out.push_back({"mixed", SampledLineFunction::sample(grid, [](double y) {
                   return Complex(y > 0.0 ? bump(y) : 0.5 * bump(-y, 3.0, 0.5));
                 })});
  return out;
}

void write_csv(std::ostream& out, const SampledLineFunction& f) {
  const nlohmann::json header{{"n", f.grid.n()}, {"Y", f.grid.Y()}};
  out << header.dump() << '\n' << "index,re,im\n";
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    out << k << ',' << format_double(f.values[k].real()) << ','
        << format_double(f.values[k].imag()) << '\n';
  }
}

void write_csv(std::ostream& out, const ComponentProfile& p) {
  const nlohmann::json header{{"n", p.grid.n},
                              {"component", component_label(p.component)},
                              {"x_min", p.grid.x_min},
                              {"dx", p.grid.dx}};
  out << header.dump() << '\n' << "index,re,im\n";
  for (std::size_t k = 0; k < p.values.size(); ++k) {
    out << k << ',' << format_double(p.values[k].real()) << ','
        << format_double(p.values[k].imag()) << '\n';
  }
}

SampledLineFunction read_line_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("csv: missing header");
  const nlohmann::json header = nlohmann::json::parse(line);
  const LineGrid grid(header.at("n").get<std::size_t>(), header.at("Y").get<double>());
  return {grid, read_rows(in, grid.n())};
}

ComponentProfile read_profile_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("csv: missing header");
  const nlohmann::json header = nlohmann::json::parse(line);
  const std::string label = header.at("component").get<std::string>();
  if (label != "+" && label != "-") throw std::invalid_argument("csv: component must be + or -");
  const LogGrid grid{header.at("n").get<std::size_t>(), header.at("x_min").get<double>(),
                     header.at("dx").get<double>()};
  if (!(grid.dx > 0.0)) throw std::invalid_argument("csv: dx must be positive");
  return {label == "+" ? CharacterComponent::even() : CharacterComponent::odd(), grid,
          read_rows(in, grid.n)};
}

}  // namespace localspec
