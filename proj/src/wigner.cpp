#include "quench/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quench/quadrature.hpp"

namespace quench::wigner {

WaveFunction WaveFunction::from_well(const well::WellState& w) {
  return WaveFunction{[w](double x) { return complex(well::psi0(w, x), 0.0); },
                      w.support_half_width(1e-13), w.kinks(), w.k0()};
}

WaveFunction WaveFunction::oscillator_ground(double omega) {
  if (!(omega > 0.0)) throw Error(ErrorCode::InvalidParams, "omega must be positive");
  const double norm = std::pow(omega / kPi, 0.25);
  return WaveFunction{[=](double x) { return complex(norm * std::exp(-0.5 * omega * x * x), 0.0); },
                      std::sqrt(2.0 * std::log(1e13) / omega), {}, 0.0};
}

WaveFunction WaveFunction::from_evolved(const free::EvolvedState& state, double half_width) {
  const auto& w = state.source();
  const double t = state.time();
  // A free packet's local wavenumber at x is about x / t.
  const double k = t > 0.0 ? half_width / t + w.k0() : w.k0();
  return WaveFunction{[state](double x) { return state(x); }, half_width, {}, k};
}

complex wigner_integral(const WaveFunction& wf, double x, double p, const Tolerances& tol) {
  tol.validate();
  const double edge = wf.half_width;
  const double tail = std::max(std::norm(wf.psi(edge)), std::norm(wf.psi(-edge)));
  if (!(tail <= tol.quad_rel)) {
    throw Error(ErrorCode::CutoffTooSmall,
                "|psi|^2 = " + std::to_string(tail) + " at the declared half-width");
  }
  const double reach = 2.0 * (edge - std::abs(x));
  if (!(reach > 0.0)) return 0.0;

  std::vector<double> fixed{0.0};
  for (double b : wf.kinks) {
    fixed.push_back(2.0 * (b - x));
    fixed.push_back(2.0 * (x - b));
  }
  const double rate = std::abs(p) + wf.wavenumber;
  const auto points = quad::oscillation_breakpoints(
      -reach, reach, [rate](double) { return rate; }, 0.5, fixed);
  const auto r = quad::integrate(
      [&](double y) {
        return std::exp(complex(0.0, -p * y)) * std::conj(wf.psi(x - 0.5 * y)) * wf.psi(x + 0.5 * y);
      },
      points, {tol.quad_abs, tol.quad_rel});
  return r.value / (2.0 * kPi);
}

double wigner_from_psi(const WaveFunction& wf, double x, double p, const Tolerances& tol) {
  return wigner_integral(wf, x, p, tol).real();
}

double wigner_infinite_well(double x, double k, double a, const Tolerances& tol) {
  const double ax = std::abs(x);
  if (ax >= a) return 0.0;
  const double c = 1.0 - ax / a;
  // Each quotient sin(z c) / z is written c sinc(z c); z -> 0 and 2ak -> +-pi
  // are then removable.
  const double window = tol.singularity_window * kPi;
  const double first = std::cos(kPi * x / a) * 2.0 * c * sinc(2.0 * k * a * c, window);
  const double second = c * sinc((2.0 * a * k + kPi) * c, window);
  const double third = c * sinc((2.0 * a * k - kPi) * c, window);
  return (first + second + third) / (2.0 * kPi);
}

double factorized_approx(const well::WellState& w, double x, double p, const Tolerances& tol) {
  const double psi = well::psi0(w, x);
  const double amp = well::psi0_momentum(w, p, tol);
  return psi * psi * amp * amp;
}

double fig7_integrand(double t, double k, double a) { return wigner_infinite_well(-k * t, k, a); }

double density_from_wigner(double x, double t, double a, const Tolerances& tol) {
  if (!(t > 0.0)) {
    if (t == 0.0) return std::norm(well::psi0(well::WellState::infinite(a), x));
    throw Error(ErrorCode::InvalidTime, "time must be non-negative");
  }
  const double lo = (x - a) / t;
  const double hi = (x + a) / t;
  const std::vector<double> fixed{x / t};
  // sin(2k(a - |x - kt|)) oscillates at up to 2a + 4|k| t per unit k.
  const auto points = quad::oscillation_breakpoints(
      lo, hi, [&](double k) { return 2.0 * a + 4.0 * std::abs(k) * t + kPi / a; }, 0.5, fixed);
  return quad::integrate([&](double k) { return wigner_infinite_well(x - k * t, k, a, tol); },
                         points, {tol.quad_abs, tol.quad_rel})
      .value;
}

double position_marginal(double x, double a, const Tolerances& tol) {
  tol.validate();
  if (std::abs(x) >= a) return 0.0;
  const double rate = 2.0 * (a - std::abs(x)) + kPi / a;
  const auto points = quad::oscillation_breakpoints(
      -tol.k_cutoff, tol.k_cutoff, [rate](double) { return rate; }, 1.0, std::vector<double>{0.0});
  return quad::integrate([&](double k) { return wigner_infinite_well(x, k, a, tol); }, points,
                         {tol.quad_abs, tol.quad_rel})
      .value;
}

double momentum_marginal(double k, double a, const Tolerances& tol) {
  tol.validate();
  const double rate = 2.0 * std::abs(k) + kPi / a;
  const auto points = quad::oscillation_breakpoints(
      -a, a, [rate](double) { return rate; }, 0.25 * a, std::vector<double>{0.0});
  return quad::integrate([&](double x) { return wigner_infinite_well(x, k, a, tol); }, points,
                         {tol.quad_abs, tol.quad_rel})
      .value;
}

double PhaseSpaceField::interpolate(double x, double p) const {
  const double fx = (x - x_grid.lo()) / x_grid.step();
  const double fp = (p - p_grid.lo()) / p_grid.step();
  const auto nx = static_cast<double>(x_grid.size() - 1);
  const auto np = static_cast<double>(p_grid.size() - 1);
  if (fx < 0.0 || fx > nx || fp < 0.0 || fp > np) return 0.0;
  const auto i = std::min(static_cast<std::size_t>(fx), x_grid.size() - 2);
  const auto j = std::min(static_cast<std::size_t>(fp), p_grid.size() - 2);
  const double u = fx - static_cast<double>(i);
  const double v = fp - static_cast<double>(j);
  return (1.0 - u) * (1.0 - v) * at(i, j) + u * (1.0 - v) * at(i + 1, j) +
         (1.0 - u) * v * at(i, j + 1) + u * v * at(i + 1, j + 1);
}

PhaseSpaceField wigner_field(const well::WellState& w, WignerSource source,
                             const SpatialGrid& x_grid, const MomentumGrid& p_grid,
                             const Tolerances& tol, Exec exec) {
  std::function<double(double, double)> initial;
  switch (source) {
    case WignerSource::ClosedFormInfiniteWell: {
      if (w.branch() != well::WellBranch::InfiniteWell) {
        throw Error(ErrorCode::InvalidParams, "closed-form Wigner function needs the infinite well");
      }
      const double a = w.a();
      initial = [a, tol](double x, double p) { return wigner_infinite_well(x, p, a, tol); };
      break;
    }
    case WignerSource::FactorizedApprox:
      initial = [w, tol](double x, double p) { return factorized_approx(w, x, p, tol); };
      break;
    case WignerSource::QuadratureFromPsi:
      break;
  }

  PhaseSpaceField field{x_grid, p_grid, std::vector<double>(x_grid.size() * p_grid.size()), 0.0,
                        source, initial};
  const std::size_t np = p_grid.size();
  if (initial) {
    fill(field.values, [&](std::size_t n) { return initial(x_grid[n / np], p_grid[n % np]); }, exec);
  } else {
    const WaveFunction wf = WaveFunction::from_well(w);
    fill(
        field.values,
        [&](std::size_t n) { return wigner_from_psi(wf, x_grid[n / np], p_grid[n % np], tol); },
        exec);
  }
  return field;
}

PhaseSpaceField shear_evolve(const PhaseSpaceField& field, double t, Exec exec) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidTime, "time must be non-negative");
  PhaseSpaceField out = field;
  out.t = field.t + t;
  if (t == 0.0) return out;
  const std::size_t np = field.p_grid.size();
  const auto& xg = field.x_grid;
  const auto& pg = field.p_grid;
  if (field.initial) {
    const double total = out.t;
    fill(
        out.values,
        [&](std::size_t n) {
          const double p = pg[n % np];
          return field.initial(xg[n / np] - p * total, p);
        },
        exec);
  } else {
    fill(
        out.values,
        [&](std::size_t n) {
          const double p = pg[n % np];
          return field.interpolate(xg[n / np] - p * t, p);
        },
        exec);
  }
  return out;
}

DensityProfile marginal_x(const PhaseSpaceField& field) {
  const std::size_t nx = field.x_grid.size();
  const std::size_t np = field.p_grid.size();
  DensityProfile out{field.x_grid, std::vector<double>(nx), field.t, DensityMethod::WignerMarginal};
  for (std::size_t i = 0; i < nx; ++i) {
    double sum = 0.5 * (field.at(i, 0) + field.at(i, np - 1));
    for (std::size_t j = 1; j + 1 < np; ++j) sum += field.at(i, j);
    out.values[i] = sum * field.p_grid.step();
  }
  return out;
}

DensityProfile marginal_p(const PhaseSpaceField& field) {
  const std::size_t nx = field.x_grid.size();
  const std::size_t np = field.p_grid.size();
  DensityProfile out{SpatialGrid(field.p_grid.lo(), field.p_grid.hi(), np), std::vector<double>(np),
                     field.t, DensityMethod::WignerMarginal};
  for (std::size_t j = 0; j < np; ++j) {
    double sum = 0.5 * (field.at(0, j) + field.at(nx - 1, j));
    for (std::size_t i = 1; i + 1 < nx; ++i) sum += field.at(i, j);
    out.values[j] = sum * field.x_grid.step();
  }
  return out;
}

double min_value(const PhaseSpaceField& field) {
  return *std::min_element(field.values.begin(), field.values.end());
}

}  // namespace quench::wigner
