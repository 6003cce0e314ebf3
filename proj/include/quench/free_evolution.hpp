#ifndef QUENCH_FREE_EVOLUTION_HPP
#define QUENCH_FREE_EVOLUTION_HPP

// Free time evolution (V_f = 0) of the square-well ground states. Two
// independent routes: the momentum-state expansion and the free propagator.

#include "quench/core.hpp"
#include "quench/square_well.hpp"

namespace quench::free {

enum class EvolutionMethod { MomentumIntegral, Propagator };

/// <x|psi(t)> = (2 pi hbar)^(-1/2) integral exp(ipx) psi0~(p) exp(-i p^2 t / 2m) dp.
///
/// The integral runs along the real axis up to a wavenumber K beyond every
/// stationary point, then continues along the ray K + s exp(-i pi/4), where
/// the free phase decays. K grows like (|x| + a) / t; CutoffTooSmall is thrown
/// when it would exceed tol.contour_k_max. At t = 0 the initial wave function
/// is returned.
complex evolve_momentum(const well::WellState& w, double x, double t, const Tolerances& tol = {});

/// Integral of K(x, x', t) psi0(x') over the support of psi0 (truncated where
/// |psi0| < 1e-13). Requires t > 0 (InvalidTime otherwise).
complex evolve_propagator(const well::WellState& w, double x, double t, const Tolerances& tol = {});

complex evolve(const well::WellState& w, double x, double t, EvolutionMethod method,
               const Tolerances& tol = {});

/// The evolved wave function as a callable handle.
class EvolvedState {
 public:
  EvolvedState(well::WellState source, double t, EvolutionMethod method, Tolerances tol = {});

  complex operator()(double x) const { return evolve(source_, x, t_, method_, tol_); }
  double density(double x) const { return std::norm((*this)(x)); }

  const well::WellState& source() const { return source_; }
  double time() const { return t_; }
  EvolutionMethod method() const { return method_; }

 private:
  well::WellState source_;
  double t_;
  EvolutionMethod method_;
  Tolerances tol_;
};

DensityProfile density_profile(const well::WellState& w, double t, const SpatialGrid& grid,
                               EvolutionMethod method = EvolutionMethod::MomentumIntegral,
                               const Tolerances& tol = {}, Exec exec = Exec::Serial);

/// <x^2> + t^2 <p^2> / m^2 from the initial moments.
double width_qm(const well::WellState& w, double t, const Tolerances& tol = {});

/// Second moment of the evolved density itself: quadrature of x^2 rho(x, t)
/// over |x| <= X (propagator route) plus the far-field tail, where
/// rho(x, t) -> (m/t) |psi0~(m x / t)|^2.
double density_second_moment(const well::WellState& w, double t, const Tolerances& tol = {});

/// Integral of rho(x, t) over |x| <= (support + 200 t); the neglected tail is
/// below 1e-7 for all three well branches.
double total_probability(const well::WellState& w, double t,
                         EvolutionMethod method = EvolutionMethod::Propagator,
                         const Tolerances& tol = {});

/// t * rho(u t, t) sampled over u = x / t (t > 0).
DensityProfile longtime_scaled_profile(const well::WellState& w, double t, const SpatialGrid& u_grid,
                                       EvolutionMethod method = EvolutionMethod::MomentumIntegral,
                                       const Tolerances& tol = {}, Exec exec = Exec::Serial);

/// m |psi0~(m u)|^2, the t -> infinity limit of longtime_scaled_profile.
double longtime_limit(const well::WellState& w, double u, const Tolerances& tol = {});

}  // namespace quench::free

#endif  // QUENCH_FREE_EVOLUTION_HPP
