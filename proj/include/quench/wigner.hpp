#ifndef QUENCH_WIGNER_HPP
#define QUENCH_WIGNER_HPP

// Wigner quasi-probability W(x, p, t) for the free quench: the position-space
// transform for arbitrary wave functions, the closed form for the ground state
// of the infinitely deep well, free-evolution shear and marginals.

#include <functional>
#include <vector>

#include "quench/core.hpp"
#include "quench/free_evolution.hpp"
#include "quench/square_well.hpp"

namespace quench::wigner {

/// A wave function handle for the position-space Wigner transform.
struct WaveFunction {
  std::function<complex(double)> psi;
  // |psi(x)| is negligible for |x| > half_width.
  double half_width = 0.0;
  // Points where psi is not smooth; used as quadrature breakpoints.
  std::vector<double> kinks;
  // Largest local wavenumber of psi.
  double wavenumber = 0.0;

  static WaveFunction from_well(const well::WellState& w);
  /// Oscillator ground state pi^(-1/4) omega^(1/4) exp(-omega x^2 / 2).
  static WaveFunction oscillator_ground(double omega = 1.0);
  static WaveFunction from_evolved(const free::EvolvedState& state, double half_width);
};

/// (1/2 pi hbar) integral exp(-i p y) psi*(x - y/2) psi(x + y/2) dy, complex
/// valued; the imaginary part is quadrature residue. Throws CutoffTooSmall if
/// |psi(+-half_width)|^2 > quad_rel.
complex wigner_integral(const WaveFunction& wf, double x, double p, const Tolerances& tol = {});
double wigner_from_psi(const WaveFunction& wf, double x, double p, const Tolerances& tol = {});

/// Closed form W(x, hbar k, 0) for the infinitely deep well of half-width a.
double wigner_infinite_well(double x, double k, double a = 1.0, const Tolerances& tol = {});

/// |psi0(x)|^2 |psi0~(p)|^2, the factorized ("classical approximation") field.
double factorized_approx(const well::WellState& w, double x, double p, const Tolerances& tol = {});

/// W(-hbar k t / m, hbar k, 0) for the infinitely deep well; its integral over
/// k is rho(0, t).
double fig7_integrand(double t, double k, double a = 1.0);

/// rho(x, t) = integral of W(x - p t / m, p, 0) dp for the infinitely deep well
/// by adaptive quadrature over the compact momentum support.
double density_from_wigner(double x, double t, double a = 1.0, const Tolerances& tol = {});

/// Integral of the infinite-well W(x, hbar k, 0) over |k| <= tol.k_cutoff;
/// approximates |psi0(x)|^2.
double position_marginal(double x, double a = 1.0, const Tolerances& tol = {});
/// Integral of the infinite-well W(x, hbar k, 0) over x; equals
/// |psi0~(hbar k)|^2.
double momentum_marginal(double k, double a = 1.0, const Tolerances& tol = {});

enum class WignerSource { ClosedFormInfiniteWell, QuadratureFromPsi, FactorizedApprox };

struct PhaseSpaceField {
  SpatialGrid x_grid;
  MomentumGrid p_grid;
  // Row-major in x: values[i * p_grid.size() + j] = W(x_i, p_j).
  std::vector<double> values;
  double t = 0.0;
  WignerSource source = WignerSource::ClosedFormInfiniteWell;
  // Exact evaluator of the t = 0 field when one is cheap; shear_evolve then
  // re-evaluates instead of interpolating.
  std::function<double(double, double)> initial;

  double at(std::size_t i, std::size_t j) const { return values[i * p_grid.size() + j]; }
  /// Bilinear interpolation; zero outside the grid.
  double interpolate(double x, double p) const;
};

/// Initial field sampled on the grid. ClosedFormInfiniteWell requires the
/// infinite well (InvalidParams otherwise).
PhaseSpaceField wigner_field(const well::WellState& w, WignerSource source, const SpatialGrid& x_grid,
                             const MomentumGrid& p_grid, const Tolerances& tol = {},
                             Exec exec = Exec::Serial);

/// W(x, p, t0 + t) = W(x - p t / m, p, t0).
PhaseSpaceField shear_evolve(const PhaseSpaceField& field, double t, Exec exec = Exec::Serial);

/// Trapezoid integral over p at every x: the position density.
DensityProfile marginal_x(const PhaseSpaceField& field);
/// Trapezoid integral over x at every p: the momentum density (grid = p axis).
DensityProfile marginal_p(const PhaseSpaceField& field);

double min_value(const PhaseSpaceField& field);

}  // namespace quench::wigner

#endif  // QUENCH_WIGNER_HPP
