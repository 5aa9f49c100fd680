#pragma once

#include <stdexcept>
#include <string>

#include "localspec/specfun.hpp"

namespace localspec {

enum class PlaceKind { real, complex, finite };

/// A local field: R, C, or a finite place with residue cardinality q > 1.
class Place {
 public:
  static Place real() { return Place(PlaceKind::real, 0.0); }
  static Place complex() { return Place(PlaceKind::complex, 0.0); }
  static Place finite(double q);

  PlaceKind kind() const { return kind_; }
  /// Residue cardinality; only meaningful for finite places.
  double q() const { return q_; }
  bool archimedean() const { return kind_ != PlaceKind::finite; }

  friend bool operator==(const Place&, const Place&) = default;

 private:
  Place(PlaceKind kind, double q) : kind_(kind), q_(q) {}
  PlaceKind kind_;
  double q_;
};

enum class ComponentKind { even, odd, complex_n, unramified, ramified };

/// A connected component of the unitary characters of a place, represented by
/// its canonical base point: chi_+ / chi_- at the real place, chi_N at the
/// complex place, and the unramified circle or a ramified component at a
/// finite place.
class CharacterComponent {
 public:
  static CharacterComponent even() { return {Place::real(), ComponentKind::even, 0}; }
  static CharacterComponent odd() { return {Place::real(), ComponentKind::odd, 0}; }
  static CharacterComponent complex(int n) {
    return {Place::complex(), ComponentKind::complex_n, n};
  }
  static CharacterComponent unramified(double q) {
    return {Place::finite(q), ComponentKind::unramified, 0};
  }
  static CharacterComponent ramified(double q) {
    return {Place::finite(q), ComponentKind::ramified, 0};
  }

  const Place& place() const { return place_; }
  ComponentKind kind() const { return kind_; }
  /// N for complex_n components, 0 otherwise.
  int index() const { return index_; }

  /// chi^{-1}; for unitary characters this is also the complex conjugate.
  CharacterComponent inverse() const;
  /// chi(-1): -1 for chi_-, (-1)^N for chi_N, +1 otherwise.
  double value_at_minus_one() const;

  std::string label() const;

  friend bool operator==(const CharacterComponent&, const CharacterComponent&) = default;

 private:
  CharacterComponent(Place place, ComponentKind kind, int index)
      : place_(place), kind_(kind), index_(index) {}
  Place place_;
  ComponentKind kind_;
  int index_;
};

class RamifiedUnsupported : public std::domain_error {
 public:
  explicit RamifiedUnsupported(const std::string& what) : std::domain_error(what) {}
};

/// s = 1/2 + i t.
inline Complex critical_point(double t) { return {0.5, t}; }

/// Tate Gamma factor Gamma(chi, s). Finite unramified places use
/// (1 - q^{s-1}) / (1 - q^{-s}).
Complex gamma_factor(const CharacterComponent& chi, Complex s);

/// d^order/ds^order log Gamma(chi, s) for order >= 1. Ramified components
/// return 0 for order >= 2 and throw RamifiedUnsupported for order 1.
Complex log_gamma_factor_derivative(const CharacterComponent& chi, int order, Complex s);

/// H(chi, s): logarithmic derivative of the Gamma factor.
Complex spectral_h(const CharacterComponent& chi, Complex s);

/// K(chi, s) = -i d^2/ds^2 log Gamma(chi, s).
Complex spectral_k(const CharacterComponent& chi, Complex s);

/// Spectral function of the N-th higher commutator, d^{N+1}/ds^{N+1} log Gamma.
/// Order 1 equals i * spectral_k.
Complex spectral_kn(const CharacterComponent& chi, int order, Complex s);

// Critical-line series evaluated term by term, with an Euler-Maclaurin
// remainder. These share no code with the polygamma path and serve as its
// independent check. Archimedean components only.

struct SeriesEstimate {
  double value;
  double tail_bound;  // bound on the neglected remainder
  int direct_terms;
};

SeriesEstimate h_line_series_estimate(const CharacterComponent& chi, double t);
SeriesEstimate k_line_series_estimate(const CharacterComponent& chi, double t);
double h_line_series(const CharacterComponent& chi, double t);
double k_line_series(const CharacterComponent& chi, double t);

/// Closed-form minimum of h on the critical line (attained at t = 0).
double minimum_h(const CharacterComponent& chi);

struct Supremum {
  double value;
  double argmax;  // t for archimedean components, theta for finite ones
  double error;
};

/// sup over the critical line of |K(chi, 1/2+it)|, or over the circle of the
/// symbol |k(e^{i theta})| at a finite place. Ramified components give 0.
Supremum sup_abs_k(const CharacterComponent& chi);

/// The interval endpoint 2 (log q)^2 / sqrt(q) quoted for the invariant
/// spectrum of K at a finite place. Reported next to sup_abs_k, not asserted.
double quoted_k_bound(double q);

}  // namespace localspec
