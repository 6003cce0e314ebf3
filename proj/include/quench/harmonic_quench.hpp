#ifndef QUENCH_HARMONIC_QUENCH_HPP
#define QUENCH_HARMONIC_QUENCH_HPP

// Closed-form dynamics after a sudden switch from an oscillator of frequency
// omega_i to V_f(x) = -F x + (m omega_f^2 / 2) x^2. omega_f = 0 is the linear
// (or free, F = 0) potential and has its own branch in every formula.

#include "quench/core.hpp"

namespace quench::harmonic {

struct QuenchParams {
  double omega_i = 1.0;
  double omega_f = 1.0;
  double force = 0.0;

  /// Parameters whose final oscillator is centred at `shift` (= F / (m omega_f^2)).
  static QuenchParams with_shift(double omega_i, double omega_f, double shift);

  void validate() const;
  bool linear() const { return omega_f == 0.0; }
  /// Spring constant m omega_f^2.
  double spring_constant() const { return omega_f * omega_f; }
  /// Centre a_F of the final oscillator; throws InvalidParams when omega_f = 0.
  double shift() const;
};

enum class InitialLevel { Ground = 0, First = 1, Second = 2 };

inline int quantum_number(InitialLevel level) { return static_cast<int>(level); }

/// alpha(t) in Delta x(t) = alpha a^dagger + alpha^* a, with a the ladder
/// operator of the initial oscillator.
complex alpha(const QuenchParams& p, double t);

double mean_position(const QuenchParams& p, double t);
double mean_momentum(const QuenchParams& p, double t);

/// Position variance; number states |n> carry an extra factor (2n + 1).
double variance_x(const QuenchParams& p, double t, InitialLevel level = InitialLevel::Ground);
double variance_p(const QuenchParams& p, double t, InitialLevel level = InitialLevel::Ground);

/// sqrt(variance_x * variance_p) for the ground state; >= hbar / 2.
double uncertainty_product(const QuenchParams& p, double t);

/// <exp(i k x(t))> for the initial number state `level`:
/// exp(i k <x(t)>) L_n(k^2 |alpha|^2) exp(-k^2 |alpha|^2 / 2).
complex characteristic_function(const QuenchParams& p, double t, double k,
                                InitialLevel level = InitialLevel::Ground);

/// Position density at time t. Ground: analytic Gaussian. First/Second:
/// Fourier inversion of characteristic_function.
DensityProfile density(const QuenchParams& p, double t, const SpatialGrid& grid,
                       InitialLevel level = InitialLevel::Ground, const Tolerances& tol = {},
                       Exec exec = Exec::Serial);

/// Gaussian momentum density (ground state only; UnsupportedLevel otherwise).
/// The returned profile's grid is the momentum grid.
DensityProfile momentum_density(const QuenchParams& p, double t, const MomentumGrid& grid,
                                InitialLevel level = InitialLevel::Ground);

/// max |rho_F(x, t) - rho_{F=0}(x - F t^2 / 2m, t)| over the grid.
/// Requires omega_f = 0 (InvalidParams otherwise).
double equivalence_shift_check(const QuenchParams& p, double t, const SpatialGrid& grid,
                               InitialLevel level = InitialLevel::Ground,
                               const Tolerances& tol = {});

}  // namespace quench::harmonic

#endif  // QUENCH_HARMONIC_QUENCH_HPP
