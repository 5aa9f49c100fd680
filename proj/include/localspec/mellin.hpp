#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "localspec/gamma_spectral.hpp"

namespace localspec {

/// Uniform grid y_k = (k - n/2) * 2Y/n, k = 0 .. n-1, with n a power of two
/// and n >= 2^12.
class LineGrid {
 public:
  LineGrid(std::size_t n, double Y);

  std::size_t n() const { return n_; }
  double Y() const { return Y_; }
  double spacing() const { return 2.0 * Y_ / static_cast<double>(n_); }
  double point(std::size_t k) const {
    return (static_cast<double>(k) - static_cast<double>(n_ / 2)) * spacing();
  }
  /// Index of y = 0.
  std::size_t origin() const { return n_ / 2; }

  friend bool operator==(const LineGrid&, const LineGrid&) = default;

 private:
  std::size_t n_;
  double Y_;
};

struct SampledLineFunction {
  LineGrid grid;
  std::vector<Complex> values;

  SampledLineFunction(LineGrid g, std::vector<Complex> v);
  template <class Fn>
  static SampledLineFunction sample(const LineGrid& g, Fn&& fn) {
    std::vector<Complex> v(g.n());
    for (std::size_t k = 0; k < g.n(); ++k) v[k] = fn(g.point(k));
    return {g, std::move(v)};
  }

  /// Continuum L^2 norm by the trapezoid rule.
  double norm() const;
};

/// x_k = x_min + k dx on the multiplicative line u = e^x, with the dual
/// frequency grid tau_j = (j - n/2) * 2 pi / (n dx).
struct LogGrid {
  std::size_t n;
  double x_min;
  double dx;

  double x(std::size_t k) const { return x_min + static_cast<double>(k) * dx; }
  double dtau() const;
  double tau(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(n / 2)) * dtau();
  }
  friend bool operator==(const LogGrid&, const LogGrid&) = default;
};

/// F(chi, tau_j) = int phi(y) chi(y) |y|^{-1/2 + i tau_j} dy for chi = chi_+ or chi_-.
struct ComponentProfile {
  CharacterComponent component;
  LogGrid grid;
  std::vector<Complex> values;

  /// max of the outer four samples on each side over max |F|.
  double boundary_ratio() const;
};

class MultiplicativeFunction {
 public:
  /// Throws std::invalid_argument on a repeated or non-real-place component,
  /// or on a profile whose grid differs from the others.
  void add(ComponentProfile profile);

  const std::vector<ComponentProfile>& profiles() const { return profiles_; }
  const ComponentProfile* find(const CharacterComponent& chi) const;

  /// (1/4 pi) sum_chi int |F(chi, tau)|^2 d tau, the square of the L^2 norm
  /// on the additive side.
  double norm_squared() const;

  /// Largest outer sample (four per side) of any profile over the largest
  /// |F| of any profile.
  double boundary_ratio() const;

 private:
  std::vector<ComponentProfile> profiles_;
};

struct MellinOptions {
  std::size_t log_points = std::size_t{1} << 15;
  double x_margin = 8.0;  // x_max = log Y + margin
  double x_span = 40.0;   // x_min = x_max - span
  int interp_order = 12;  // local Lagrange stencil between the two grids
};

class LeakageError : public std::runtime_error {
 public:
  explicit LeakageError(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedKind : public std::invalid_argument {
 public:
  explicit UnsupportedKind(const std::string& what) : std::invalid_argument(what) {}
};

/// Even/odd split, u = +-e^x, weight |u|^{1/2}, FFT on the x-grid. Throws
/// LeakageError if f does not decay at the edge of its grid or the
/// profiles do not decay at the edge of the tau-grid.
MultiplicativeFunction to_multiplicative(const SampledLineFunction& f,
                                         const MellinOptions& opts = {});

/// Inverse of to_multiplicative, sampled on `grid`. y = 0 is filled by even
/// quadratic extrapolation from y = dy and 2 dy.
SampledLineFunction from_multiplicative(const MultiplicativeFunction& F, const LineGrid& grid,
                                        const MellinOptions& opts = {});

enum class SpectralKind { A, Fourier, H, K, KN };

struct SpectralOp {
  SpectralKind kind;
  int order = 0;  // K_N only
};

SpectralOp parse_spectral_op(const std::string& name);

/// A: (1/i) d/dtau, done as multiplication by x on the log grid.
/// Fourier: F(chi, tau) -> Gamma(chi, 1/2 + i tau) F(conj chi, -tau).
/// H, K, K_N: multiplication by spectral_h / spectral_k / spectral_kn at
/// 1/2 + i tau.
MultiplicativeFunction apply_spectral(const SpectralOp& op, const MultiplicativeFunction& F);

enum class DirectKind { A, B, H, K };

DirectKind parse_direct_kind(const std::string& name);

struct DirectOptions {
  int padding = 4;  // zero padding factor for the FFT inside B
};

/// Operators on the sampled line. A multiplies by log|y|; B is conjugate to
/// A under the additive Fourier transform with kernel e^{+2 pi i x y}; the
/// singular bins of log|y| and log|x| take the value log(d / 2 pi) for grid
/// spacing d. H = A + B, K = i (B A - A B); K needs f to vanish near 0.
SampledLineFunction direct_apply(DirectKind kind, const SampledLineFunction& f,
                                 const DirectOptions& opts = {});

/// sup over Y/4 <= |y| <= Y/2 of |y (B f)(y)|.
double decay_bound(const SampledLineFunction& f, const DirectOptions& opts = {});

/// ||a - b|| / ||b|| on the grid; `punctured` drops y = 0.
double relative_l2(const SampledLineFunction& a, const SampledLineFunction& b,
                   bool punctured = false);
/// Same over all profiles; components missing on one side count as zero.
double relative_l2(const MultiplicativeFunction& a, const MultiplicativeFunction& b);

struct NamedFunction {
  std::string name;
  SampledLineFunction f;
};

/// b(r) = exp(-1 / (1 - u^2)), u = (r - c)/w on |u| < 1.
double bump(double r, double center = 3.0, double width = 1.0);

/// even b(|y|), odd sgn(y) b(|y|), and mixed b(y) on y > 0 plus
/// 0.5 b(-y; 3, 0.5) on y < 0. All supported in 2 <= |y| <= 4.
std::vector<NamedFunction> bump_suite(const LineGrid& grid);

/// First line: JSON header; then "index,re,im" rows.
void write_csv(std::ostream& out, const SampledLineFunction& f);
void write_csv(std::ostream& out, const ComponentProfile& p);
SampledLineFunction read_line_csv(std::istream& in);
ComponentProfile read_profile_csv(std::istream& in);

}  // namespace localspec
