#include "quench/harmonic_quench.hpp"

#include <cmath>
#include <string>

namespace quench::harmonic {

namespace {

void require_time(double t) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidTime, "time must be non-negative");
}

double gaussian(double x, double mean, double variance) {
  const double d = x - mean;
  return std::exp(-0.5 * d * d / variance) / std::sqrt(2.0 * kPi * variance);
}

// Laguerre polynomials L_n(s) for the number states in scope.
double laguerre(int n, double s) {
  switch (n) {
    case 0: return 1.0;
    case 1: return 1.0 - s;
    case 2: return 1.0 - 2.0 * s + 0.5 * s * s;
  }
  throw Error(ErrorCode::UnsupportedLevel, "initial level " + std::to_string(n));
}

}  // namespace

QuenchParams QuenchParams::with_shift(double omega_i, double omega_f, double shift) {
  if (!(omega_f > 0.0)) {
    throw Error(ErrorCode::InvalidParams, "a shift a_F requires omega_f > 0");
  }
  QuenchParams p{omega_i, omega_f, shift * omega_f * omega_f};
  p.validate();
  return p;
}

void QuenchParams::validate() const {
  if (!(omega_i > 0.0) || !std::isfinite(omega_i)) {
    throw Error(ErrorCode::InvalidParams, "omega_i must be positive");
  }
  if (!(omega_f >= 0.0) || !std::isfinite(omega_f)) {
    throw Error(ErrorCode::InvalidParams, "omega_f must be non-negative");
  }
  if (!std::isfinite(force)) throw Error(ErrorCode::InvalidParams, "force must be finite");
}

double QuenchParams::shift() const {
  if (linear()) throw Error(ErrorCode::InvalidParams, "a_F is undefined for omega_f = 0");
  return force / spring_constant();
}

complex alpha(const QuenchParams& p, double t) {
  p.validate();
  const double scale = std::sqrt(0.5 / p.omega_i);
  if (p.linear()) return scale * complex(1.0, p.omega_i * t);
  const double phase = p.omega_f * t;
  return scale * complex(std::cos(phase), p.omega_i / p.omega_f * std::sin(phase));
}

double mean_position(const QuenchParams& p, double t) {
  p.validate();
  require_time(t);
  if (p.linear()) return 0.5 * p.force * t * t;
  return p.shift() * (1.0 - std::cos(p.omega_f * t));
}

double mean_momentum(const QuenchParams& p, double t) {
  p.validate();
  require_time(t);
  if (p.linear()) return p.force * t;
  return p.shift() * p.omega_f * std::sin(p.omega_f * t);
}

double variance_x(const QuenchParams& p, double t, InitialLevel level) {
  p.validate();
  require_time(t);
  const double ground = 0.5 / p.omega_i;
  const double n_factor = 2.0 * quantum_number(level) + 1.0;
  if (p.linear()) {
    return n_factor * ground * (1.0 + p.omega_i * p.omega_i * t * t);
  }
  const double c = std::cos(p.omega_f * t);
  const double s = std::sin(p.omega_f * t);
  const double ratio = p.omega_i / p.omega_f;
  return n_factor * ground * (c * c + ratio * ratio * s * s);
}

double variance_p(const QuenchParams& p, double t, InitialLevel level) {
  p.validate();
  require_time(t);
  const double ground = 0.5 * p.omega_i;
  const double n_factor = 2.0 * quantum_number(level) + 1.0;
  if (p.linear()) return n_factor * ground;
  const double c = std::cos(p.omega_f * t);
  const double s = std::sin(p.omega_f * t);
  const double ratio = p.omega_f / p.omega_i;
  return n_factor * ground * (c * c + ratio * ratio * s * s);
}

double uncertainty_product(const QuenchParams& p, double t) {
  return std::sqrt(variance_x(p, t) * variance_p(p, t));
}

complex characteristic_function(const QuenchParams& p, double t, double k, InitialLevel level) {
  const double a2 = std::norm(alpha(p, t));
  const double s = k * k * a2;
  return std::exp(complex(0.0, k * mean_position(p, t))) *
         (laguerre(quantum_number(level), s) * std::exp(-0.5 * s));
}

DensityProfile density(const QuenchParams& p, double t, const SpatialGrid& grid,
                       InitialLevel level, const Tolerances& tol, Exec exec) {
  p.validate();
  require_time(t);
  if (level == InitialLevel::Ground) {
    const double mean = mean_position(p, t);
    const double var = variance_x(p, t);
    DensityProfile out{grid, std::vector<double>(grid.size()), t, DensityMethod::Analytic};
    fill(out.values, [&](std::size_t i) { return gaussian(grid[i], mean, var); }, exec);
    return out;
  }
  const auto chi = [p, t, level](double k) { return characteristic_function(p, t, k, level); };
  DensityProfile out = characteristic_to_density(chi, grid, tol, exec);
  out.time = t;
  return out;
}

DensityProfile momentum_density(const QuenchParams& p, double t, const MomentumGrid& grid,
                                InitialLevel level) {
  if (level != InitialLevel::Ground) {
    throw Error(ErrorCode::UnsupportedLevel, "momentum density is implemented for the ground state");
  }
  const double mean = mean_momentum(p, t);
  const double var = variance_p(p, t);
  DensityProfile out{SpatialGrid(grid.lo(), grid.hi(), grid.size()),
                     std::vector<double>(grid.size()), t, DensityMethod::Analytic};
  for (std::size_t i = 0; i < grid.size(); ++i) out.values[i] = gaussian(grid[i], mean, var);
  return out;
}

double equivalence_shift_check(const QuenchParams& p, double t, const SpatialGrid& grid,
                               InitialLevel level, const Tolerances& tol) {
  p.validate();
  if (!p.linear()) {
    throw Error(ErrorCode::InvalidParams, "the equivalence-principle shift needs omega_f = 0");
  }
  const double shift = mean_position(p, t);
  QuenchParams free = p;
  free.force = 0.0;
  const DensityProfile forced = density(p, t, grid, level, tol);
  const DensityProfile unforced =
      density(free, t, SpatialGrid(grid.lo() - shift, grid.hi() - shift, grid.size()), level, tol);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    worst = std::max(worst, std::abs(forced.values[i] - unforced.values[i]));
  }
  return worst;
}

}  // namespace quench::harmonic
