#ifndef QUENCH_CLASSICAL_HPP
#define QUENCH_CLASSICAL_HPP

// Classical statistical mechanics with factorized initial phase-space
// densities rho0(x0) rho0~(p0): free streaming x = x0 + p0 t / m, and the
// thermal Gaussian ensemble in a quenched oscillator.

#include <functional>
#include <optional>
#include <vector>

#include "quench/core.hpp"
#include "quench/harmonic_quench.hpp"
#include "quench/square_well.hpp"

namespace quench::classical {

struct GaussianFactors {
  double x_variance;
  double p_variance;
};

class ClassicalEnsemble {
 public:
  using Density = std::function<double(double)>;

  /// |psi0(x0)|^2 |psi0~(p0)|^2 for a square-well ground state.
  static ClassicalEnsemble from_well(const well::WellState& w, const Tolerances& tol = {});
  /// Canonical ensemble of the oscillator omega_i at temperature kT (m = 1).
  static ClassicalEnsemble thermal(double omega_i, double kT);
  /// Zero-mean Gaussian factors with the given variances.
  static ClassicalEnsemble gaussian(GaussianFactors factors);

  double rho_x(double x) const { return rho_x_(x); }
  double rho_p(double p) const { return rho_p_(p); }
  /// Only product densities are representable.
  bool factorized() const { return true; }

  double x2() const { return x2_; }
  double p2() const { return p2_; }
  /// rho_x is negligible beyond this |x0|.
  double half_width() const { return half_width_; }
  /// Points where rho_x is not smooth.
  const std::vector<double>& kinks() const { return kinks_; }
  /// Scale of oscillation of rho_p in p (rho_p ~ cos^2(p L)); 0 if none.
  double momentum_oscillation() const { return p_osc_; }
  /// Scale of oscillation of rho_x in x.
  double position_oscillation() const { return x_osc_; }
  const std::optional<GaussianFactors>& gaussian_factors() const { return gaussian_; }

 private:
  ClassicalEnsemble() = default;

  Density rho_x_;
  Density rho_p_;
  double x2_ = 0.0;
  double p2_ = 0.0;
  double half_width_ = 0.0;
  std::vector<double> kinks_;
  double p_osc_ = 0.0;
  double x_osc_ = 0.0;
  std::optional<GaussianFactors> gaussian_;
};

enum class FreeRoute {
  // Integral over p0 of rho0(x - p0 t / m) rho0~(p0).
  Trajectory,
  // (m / t) integral over x0 of rho0(x0) rho0~(m (x - x0) / t).
  PositionFirst,
};

/// Free-streaming position density. t = 0 returns rho_x(x).
double classical_free_density(const ClassicalEnsemble& e, double x, double t,
                              FreeRoute route = FreeRoute::PositionFirst,
                              const Tolerances& tol = {});

DensityProfile classical_free_profile(const ClassicalEnsemble& e, double t, const SpatialGrid& grid,
                                      FreeRoute route = FreeRoute::PositionFirst,
                                      const Tolerances& tol = {}, Exec exec = Exec::Serial);

/// <x0^2> + t^2 <p0^2> / m^2 (even rho_x, so <x0> = <x0 p0> = 0).
double classical_width(const ClassicalEnsemble& e, double t);

/// m rho0~(m u): the t -> infinity limit of t rho_cl(u t, t).
double classical_longtime(const ClassicalEnsemble& e, double u);

struct TemperatureChoice {
  double kT;
  /// kT = hbar omega_i / 2, which reproduces the quantum ground-state widths.
  static TemperatureChoice matched(double omega_i = 1.0) { return {0.5 * omega_i}; }
};

/// Thermal ensemble of the initial oscillator evolved in the final potential:
/// Gaussian with the quantum mean and variance
/// <x0^2> cos^2(omega_f t) + <p0^2> sin^2(omega_f t) / (m omega_f)^2.
double classical_harmonic_density(const harmonic::QuenchParams& params, TemperatureChoice temperature,
                                  double x, double t);
/// Same for an arbitrary ensemble; only Gaussian factors are supported
/// (UnsupportedEnsemble otherwise).
double classical_harmonic_density(const harmonic::QuenchParams& params, const ClassicalEnsemble& e,
                                  double x, double t);

}  // namespace quench::classical

#endif  // QUENCH_CLASSICAL_HPP
