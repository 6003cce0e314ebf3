#include "quench/classical.hpp"

#include <algorithm>
#include <cmath>

#include "quench/quadrature.hpp"

namespace quench::classical {

namespace {

double gaussian_pdf(double x, double mean, double variance) {
  const double d = x - mean;
  return std::exp(-0.5 * d * d / variance) / std::sqrt(2.0 * kPi * variance);
}

}  // namespace

ClassicalEnsemble ClassicalEnsemble::from_well(const well::WellState& w, const Tolerances& tol) {
  const auto m = well::moments(w, tol);
  ClassicalEnsemble e;
  e.rho_x_ = [w](double x) {
    const double v = well::psi0(w, x);
    return v * v;
  };
  e.rho_p_ = [w, tol](double p) {
    const double v = well::psi0_momentum(w, p, tol);
    return v * v;
  };
  e.x2_ = m.x2;
  e.p2_ = m.p2;
  e.half_width_ = w.support_half_width(1e-13);
  e.kinks_ = w.kinks();
  e.p_osc_ = w.oscillation_length();
  e.x_osc_ = w.k0();
  return e;
}

ClassicalEnsemble ClassicalEnsemble::gaussian(GaussianFactors factors) {
  if (!(factors.x_variance > 0.0) || !(factors.p_variance > 0.0)) {
    throw Error(ErrorCode::InvalidParams, "Gaussian variances must be positive");
  }
  ClassicalEnsemble e;
  const double vx = factors.x_variance;
  const double vp = factors.p_variance;
  e.rho_x_ = [vx](double x) { return gaussian_pdf(x, 0.0, vx); };
  e.rho_p_ = [vp](double p) { return gaussian_pdf(p, 0.0, vp); };
  e.x2_ = vx;
  e.p2_ = vp;
  // exp(-x^2 / 2 vx) < 1e-26 beyond this.
  e.half_width_ = std::sqrt(2.0 * vx * 60.0);
  e.gaussian_ = factors;
  return e;
}

ClassicalEnsemble ClassicalEnsemble::thermal(double omega_i, double kT) {
  if (!(omega_i > 0.0)) throw Error(ErrorCode::InvalidParams, "omega_i must be positive");
  if (!(kT > 0.0)) throw Error(ErrorCode::InvalidParams, "temperature must be positive");
  return gaussian({kT / (omega_i * omega_i), kT});
}

double classical_free_density(const ClassicalEnsemble& e, double x, double t, FreeRoute route,
                              const Tolerances& tol) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidTime, "time must be non-negative");
  if (t == 0.0) return e.rho_x(x);
  tol.validate();
  const quad::Options options{tol.quad_abs, tol.quad_rel};
  const double L = e.half_width();

  if (route == FreeRoute::PositionFirst) {
    std::vector<double> fixed;
    for (double k : e.kinks()) {
      if (std::abs(k) < L) fixed.push_back(k);
    }
    const double rate = e.momentum_oscillation() / t + e.position_oscillation() + 1.0 / std::sqrt(t);
    const auto points = quad::oscillation_breakpoints(
        -L, L, [rate](double) { return rate; }, 0.5, fixed);
    return quad::integrate(
               [&](double x0) { return e.rho_x(x0) * e.rho_p((x - x0) / t); }, points, options)
               .value /
           t;
  }

  // Trajectory route: rho_x(x - p t) vanishes unless p in [(x - L)/t, (x + L)/t].
  const double lo = (x - L) / t;
  const double hi = (x + L) / t;
  std::vector<double> fixed;
  for (double k : e.kinks()) fixed.push_back((x - k) / t);
  const double rate = e.momentum_oscillation() + e.position_oscillation() * t + std::sqrt(t);
  const auto points = quad::oscillation_breakpoints(
      lo, hi, [rate](double) { return rate; }, 0.5, fixed);
  return quad::integrate([&](double p) { return e.rho_x(x - p * t) * e.rho_p(p); }, points, options)
      .value;
}

DensityProfile classical_free_profile(const ClassicalEnsemble& e, double t, const SpatialGrid& grid,
                                      FreeRoute route, const Tolerances& tol, Exec exec) {
  DensityProfile out{grid, std::vector<double>(grid.size()), t, DensityMethod::Classical};
  fill(out.values, [&](std::size_t i) { return classical_free_density(e, grid[i], t, route, tol); },
       exec);
  return out;
}

double classical_width(const ClassicalEnsemble& e, double t) { return e.x2() + t * t * e.p2(); }

double classical_longtime(const ClassicalEnsemble& e, double u) { return e.rho_p(u); }

double classical_harmonic_density(const harmonic::QuenchParams& params, const ClassicalEnsemble& e,
                                  double x, double t) {
  params.validate();
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidTime, "time must be non-negative");
  const auto& g = e.gaussian_factors();
  if (!g) {
    throw Error(ErrorCode::UnsupportedEnsemble,
                "harmonic evolution needs an ensemble with Gaussian factors");
  }
  double variance;
  if (params.linear()) {
    variance = g->x_variance + g->p_variance * t * t;
  } else {
    const double w = params.omega_f;
    const double c = std::cos(w * t);
    const double s = std::sin(w * t);
    variance = g->x_variance * c * c + g->p_variance * s * s / (w * w);
  }
  return gaussian_pdf(x, harmonic::mean_position(params, t), variance);
}

double classical_harmonic_density(const harmonic::QuenchParams& params, TemperatureChoice temperature,
                                  double x, double t) {
  params.validate();
  return classical_harmonic_density(params, ClassicalEnsemble::thermal(params.omega_i, temperature.kT),
                                    x, t);
}

}  // namespace quench::classical
