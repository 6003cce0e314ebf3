#ifndef QUENCH_SQUARE_WELL_HPP
#define QUENCH_SQUARE_WELL_HPP

// Ground states of the attractive square well and its two limits (delta well,
// infinitely deep well), in position and momentum representation.

#include <vector>

#include "quench/core.hpp"

namespace quench::well {

enum class WellBranch { FiniteWell, DeltaWell, InfiniteWell };

class WellState {
 public:
  /// Finite well parametrised by k0 a in (0, pi/2); kappa = k0 tan(k0 a).
  static WellState finite(double k0a, double a = 1.0);
  static WellState delta(double kappa);
  static WellState infinite(double a = 1.0);
  /// finite() below pi/2, infinite() at exactly pi/2.
  static WellState from_k0a(double k0a, double a = 1.0);

  WellBranch branch() const { return branch_; }
  double a() const { return a_; }
  double k0() const { return k0_; }
  double k0a() const { return k0_ * a_; }
  double kappa() const { return kappa_; }
  double c0() const { return c0_; }

  /// Points where psi0 has a discontinuous derivative (or its support ends).
  std::vector<double> kinks() const;
  /// |x| beyond which |psi0| < threshold.
  double support_half_width(double threshold = 1e-12) const;
  /// Scale of oscillation of psi0 in x, used for complex-plane growth bounds.
  double oscillation_length() const;

 private:
  WellState(WellBranch branch, double a, double k0, double kappa, double c0)
      : branch_(branch), a_(a), k0_(k0), kappa_(kappa), c0_(c0) {}

  WellBranch branch_;
  double a_;
  double k0_;
  double kappa_;
  double c0_;
};

double psi0(const WellState& w, double x);
/// d psi0 / dx (one-sided limit taken from the inside at kinks).
double psi0_derivative(const WellState& w, double x);

/// Momentum amplitude psi0~(hbar k) (real and even). Removable singularities
/// at |k| = k0 are evaluated by Taylor expansion inside
/// tol.singularity_window * k0.
double psi0_momentum(const WellState& w, double k, const Tolerances& tol = {});

/// Analytic continuation of psi0_momentum to complex k; only valid away from
/// |k| = k0 on the real axis.
complex psi0_momentum(const WellState& w, complex k);

struct Moments {
  double x2;  // <x^2>
  double p2;  // <p^2>
};

/// <x^2> by position quadrature; <p^2> by momentum quadrature of k^2 psi0~^2
/// up to a large wavenumber plus the analytic far tail.
Moments moments(const WellState& w, const Tolerances& tol = {});

/// Integral of k^2 psi0~(k)^2 over |k| > k_min (both sides).
double momentum_p2_tail(const WellState& w, double k_min, const Tolerances& tol = {});

}  // namespace quench::well

#endif  // QUENCH_SQUARE_WELL_HPP
