#include "quench/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "quench/quadrature.hpp"

namespace quench {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

UnitSystem UnitSystem::square_well(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidParams, "well half-width must be positive");
  return {UnitConvention::NaturalSquareWell, a};
}

UnitSystem UnitSystem::oscillator(double omega_i) {
  if (!(omega_i > 0.0)) throw Error(ErrorCode::InvalidParams, "omega_i must be positive");
  return {UnitConvention::NaturalOscillator, 1.0 / std::sqrt(omega_i)};
}

void Tolerances::validate() const {
  if (!(quad_abs > 0.0 && quad_rel > 0.0 && k_cutoff > 0.0 && singularity_window > 0.0 &&
        contour_k_max > 0.0)) {
    throw Error(ErrorCode::InvalidParams, "all tolerances must be strictly positive");
  }
}

std::string_view to_string(DensityMethod method) {
  switch (method) {
    case DensityMethod::Analytic: return "analytic";
    case DensityMethod::MomentumIntegral: return "momentum-integral";
    case DensityMethod::Propagator: return "propagator";
    case DensityMethod::WignerMarginal: return "wigner-marginal";
    case DensityMethod::Classical: return "classical";
  }
  return "unknown";
}

double integrate_density(const DensityProfile& d) {
  const auto& v = d.values;
  if (v.size() != d.grid.size()) {
    throw Error(ErrorCode::InvalidGrid, "value count does not match grid size");
  }
  double sum = 0.5 * (v.front() + v.back());
  for (std::size_t i = 1; i + 1 < v.size(); ++i) sum += v[i];
  return sum * d.grid.step();
}

double second_moment(const DensityProfile& d) {
  DensityProfile weighted = d;
  for (std::size_t i = 0; i < weighted.values.size(); ++i) {
    const double x = d.grid[i];
    weighted.values[i] *= x * x;
  }
  return integrate_density(weighted);
}

DensityProfile convert_units(const DensityProfile& d, const UnitSystem& from, const UnitSystem& to) {
  const double scale = from.length / to.length;
  DensityProfile out{SpatialGrid(d.grid.lo() * scale, d.grid.hi() * scale, d.grid.size()),
                     d.values, d.time * from.time() / to.time(), d.method};
  for (double& v : out.values) v /= scale;
  return out;
}

namespace {

// Largest |k| <= k_cutoff at which chi is still above a negligible level;
// the integral beyond it is dropped.
double effective_support(const CharacteristicFunction& chi, const Tolerances& tol) {
  const double negligible = 1e-3 * tol.quad_abs;
  const double step = 0.25;
  for (double k = tol.k_cutoff; k > 0.0; k -= step) {
    if (std::abs(chi(k)) > negligible || std::abs(chi(-k)) > negligible) {
      return std::min(tol.k_cutoff, k + 4.0 * step);
    }
  }
  return 4.0 * step;
}

complex integrate_characteristic(const CharacteristicFunction& chi, double x, double support,
                                 const Tolerances& tol) {
  const double rate = std::abs(x);
  auto points = quad::oscillation_breakpoints(
      -support, support, [rate](double) { return rate; }, 1.0);
  const auto integrand = [&](double k) { return std::exp(complex(0.0, -k * x)) * chi(k); };
  const auto r = quad::integrate(integrand, points, {tol.quad_abs, tol.quad_rel});
  return r.value / (2.0 * kPi);
}

void require_decay(const CharacteristicFunction& chi, const Tolerances& tol) {
  const double edge = std::max(std::abs(chi(tol.k_cutoff)), std::abs(chi(-tol.k_cutoff)));
  if (!(edge <= tol.quad_rel)) {
    throw Error(ErrorCode::CutoffTooSmall, "|chi(k_cutoff)| = " + std::to_string(edge) +
                                               " exceeds quad_rel; raise k_cutoff");
  }
}

}  // namespace

complex characteristic_integral(const CharacteristicFunction& chi, double x, const Tolerances& tol) {
  tol.validate();
  require_decay(chi, tol);
  return integrate_characteristic(chi, x, effective_support(chi, tol), tol);
}

DensityProfile characteristic_to_density(const CharacteristicFunction& chi, const SpatialGrid& grid,
                                         const Tolerances& tol, Exec exec) {
  tol.validate();
  require_decay(chi, tol);
  const double support = effective_support(chi, tol);
  DensityProfile out{grid, std::vector<double>(grid.size()), 0.0, DensityMethod::MomentumIntegral};
  fill(
      out.values,
      [&](std::size_t i) { return integrate_characteristic(chi, grid[i], support, tol).real(); },
      exec);
  return out;
}

double sinc(double u, double window) {
  if (std::abs(u) < window) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0);
  }
  return std::sin(u) / u;
}

}  // namespace quench
