#include "quench/free_evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "quench/quadrature.hpp"

namespace quench::free {

namespace {

using well::WellState;

const double kSqrt2 = std::sqrt(2.0);
const complex kRay = complex(1.0, -1.0) / kSqrt2;  // exp(-i pi/4)

// Minimum decay rate margin (in 1/length) along the rotated ray.
constexpr double kRayMargin = 2.0;
// Exponent at which the ray integrand is considered negligible.
constexpr double kRayExponent = 50.0;

// psi0~(k) cos(k x) exp(-i k^2 t / 2) on the rotated ray, expanded into single
// exponentials exp(i k (+-a +- x) - i k^2 t / 2) so that no factor overflows
// on its own for large |x|.
complex momentum_integrand(const WellState& w, complex k, double x, double t) {
  const complex i(0.0, 1.0);
  const complex phase = -0.5 * i * k * k * t;
  // cos(k x) exp(i k shift) exp(phase)
  const auto wave = [&](double shift) {
    return 0.5 * (std::exp(i * k * (shift + x) + phase) + std::exp(i * k * (shift - x) + phase));
  };
  const double norm = std::sqrt(2.0 / kPi);
  const double a = w.a();
  switch (w.branch()) {
    case well::WellBranch::DeltaWell: {
      const double kappa = w.kappa();
      return norm * kappa * std::sqrt(kappa) / (k * k + kappa * kappa) * wave(0.0);
    }
    case well::WellBranch::InfiniteWell: {
      const double k0 = w.k0();
      return norm * k0 / std::sqrt(a) / (k0 * k0 - k * k) * 0.5 * (wave(a) + wave(-a));
    }
    case well::WellBranch::FiniteWell: {
      const double k0 = w.k0();
      const double kappa = w.kappa();
      const complex rational = norm * w.c0() * (1.0 / (k * k + kappa * kappa) - 1.0 / (k * k - k0 * k0));
      return rational * 0.5 * ((kappa + i * k) * wave(a) + (kappa - i * k) * wave(-a));
    }
  }
  return 0.0;
}

void require_positive_time(double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidTime, "the propagator route needs t > 0");
}

}  // namespace

complex evolve_momentum(const WellState& w, double x, double t, const Tolerances& tol) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidTime, "time must be non-negative");
  if (t == 0.0) return psi0(w, x);
  tol.validate();

  const double ax = std::abs(x);
  const double growth = w.oscillation_length() + ax;
  const double k_turn = std::max((growth + kRayMargin) / t, 2.0 * w.k0() + 2.0 / w.a());
  if (k_turn > tol.contour_k_max) {
    throw Error(ErrorCode::CutoffTooSmall,
                "momentum route needs k up to " + std::to_string(k_turn) +
                    " (contour_k_max = " + std::to_string(tol.contour_k_max) + ")");
  }
  const quad::Options options{tol.quad_abs, tol.quad_rel};

  // Real segment [0, K]: local angular rate |x| + k t + a bounds every phase.
  const double osc = w.oscillation_length();
  const auto real_points = quad::oscillation_breakpoints(
      0.0, k_turn, [&](double k) { return ax + k * t + osc; }, 1.0);
  const auto real_part = quad::integrate(
      [&](double k) {
        return psi0_momentum(w, k, tol) * std::cos(k * x) *
               std::exp(complex(0.0, -0.5 * k * k * t));
      },
      real_points, options);

  // Ray K + s exp(-i pi/4): |integrand| <~ exp(-gamma s - t s^2 / 2).
  const double gamma = (k_turn * t - growth) / kSqrt2;
  const double s_max = std::min(kRayExponent / gamma, std::sqrt(2.0 * kRayExponent / t));
  const auto ray_points = quad::oscillation_breakpoints(
      0.0, s_max, [&](double s) { return (k_turn + s) * t + growth; }, 1.0);
  const auto ray_part = quad::integrate(
      [&](double s) { return momentum_integrand(w, k_turn + s * kRay, x, t); }, ray_points,
      options);

  return std::sqrt(2.0 / kPi) * (real_part.value + kRay * ray_part.value);
}

complex evolve_propagator(const WellState& w, double x, double t, const Tolerances& tol) {
  require_positive_time(t);
  tol.validate();
  const double edge = w.support_half_width(1e-13);
  std::vector<double> fixed = w.kinks();
  fixed.push_back(x);
  const double osc = w.oscillation_length() > 0.0 ? w.k0() : 0.0;
  const auto points = quad::oscillation_breakpoints(
      -edge, edge, [&](double xp) { return std::abs(x - xp) / t + osc; }, 0.5, fixed);
  const auto r = quad::integrate(
      [&](double xp) {
        const double d = x - xp;
        return std::exp(complex(0.0, 0.5 * d * d / t)) * psi0(w, xp);
      },
      points, {tol.quad_abs, tol.quad_rel});
  return kRay / std::sqrt(2.0 * kPi * t) * r.value;
}

complex evolve(const WellState& w, double x, double t, EvolutionMethod method,
               const Tolerances& tol) {
  return method == EvolutionMethod::Propagator ? evolve_propagator(w, x, t, tol)
                                               : evolve_momentum(w, x, t, tol);
}

EvolvedState::EvolvedState(WellState source, double t, EvolutionMethod method, Tolerances tol)
    : source_(source), t_(t), method_(method), tol_(tol) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidTime, "time must be non-negative");
  if (method == EvolutionMethod::Propagator) require_positive_time(t);
  tol_.validate();
}

DensityProfile density_profile(const WellState& w, double t, const SpatialGrid& grid,
                               EvolutionMethod method, const Tolerances& tol, Exec exec) {
  if (method == EvolutionMethod::Propagator) require_positive_time(t);
  DensityProfile out{grid, std::vector<double>(grid.size()), t,
                     method == EvolutionMethod::Propagator ? DensityMethod::Propagator
                                                           : DensityMethod::MomentumIntegral};
  fill(out.values, [&](std::size_t i) { return std::norm(evolve(w, grid[i], t, method, tol)); },
       exec);
  return out;
}

double width_qm(const WellState& w, double t, const Tolerances& tol) {
  const auto m = well::moments(w, tol);
  return m.x2 + t * t * m.p2;
}

namespace {

// Panels over [0, x_max] for integrals of rho(x, t): the far field oscillates
// like cos^2(x a / t), the delta well not at all.
std::vector<double> density_breakpoints(const WellState& w, double t, double x_max) {
  const double rate = 2.0 * w.oscillation_length() / t;
  const double base = std::min(0.25, std::sqrt(t) / 4.0);
  std::vector<double> points{0.0};
  std::vector<double> fixed;
  for (double kink : w.kinks()) {
    if (kink > 0.0) fixed.push_back(kink);
  }
  double x = 0.0;
  while (x < x_max) {
    double h = std::max(base, 0.05 * x);
    if (rate > 0.0) h = std::min(h, 2.0 * kPi / rate);
    x = std::min(x + h, x_max);
    points.push_back(x);
  }
  for (double f : fixed) {
    if (f < x_max) points.push_back(f);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace

double density_second_moment(const WellState& w, double t, const Tolerances& tol) {
  if (t == 0.0) return well::moments(w, tol).x2;
  require_positive_time(t);
  const double x_max = w.support_half_width(1e-13) + 200.0 * t;
  const auto points = density_breakpoints(w, t, x_max);
  const auto bulk = quad::integrate(
      [&](double x) { return x * x * std::norm(evolve_propagator(w, x, t, tol)); }, points,
      {tol.quad_abs, 1e-3 * tol.quad_rel});
  return 2.0 * bulk.value + t * t * well::momentum_p2_tail(w, x_max / t, tol);
}

double total_probability(const WellState& w, double t, EvolutionMethod method,
                         const Tolerances& tol) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidTime, "time must be non-negative");
  const double x_max = w.support_half_width(1e-13) + 200.0 * t;
  if (t == 0.0) {
    std::vector<double> points{0.0};
    for (double kink : w.kinks()) {
      if (kink > 0.0) points.push_back(kink);
    }
    points.push_back(std::max(points.back(), x_max));
    const auto r = quad::integrate(
        [&](double x) {
          const double v = psi0(w, x);
          return v * v;
        },
        points, {tol.quad_abs, 1e-3 * tol.quad_rel});
    return 2.0 * r.value;
  }
  const auto points = density_breakpoints(w, t, x_max);
  const auto r = quad::integrate(
      [&](double x) { return std::norm(evolve(w, x, t, method, tol)); }, points,
      {tol.quad_abs, tol.quad_rel});
  return 2.0 * r.value;
}

DensityProfile longtime_scaled_profile(const WellState& w, double t, const SpatialGrid& u_grid,
                                       EvolutionMethod method, const Tolerances& tol, Exec exec) {
  require_positive_time(t);
  DensityProfile out{u_grid, std::vector<double>(u_grid.size()), t,
                     method == EvolutionMethod::Propagator ? DensityMethod::Propagator
                                                           : DensityMethod::MomentumIntegral};
  fill(
      out.values,
      [&](std::size_t i) { return t * std::norm(evolve(w, u_grid[i] * t, t, method, tol)); },
      exec);
  return out;
}

double longtime_limit(const WellState& w, double u, const Tolerances& tol) {
  const double amp = psi0_momentum(w, u, tol);
  return amp * amp;
}

}  // namespace quench::free
