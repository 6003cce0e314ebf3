#include "quench/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>

#include <boost/math/tools/minima.hpp>

#include "quench/classical.hpp"
#include "quench/free_evolution.hpp"
#include "quench/harmonic_quench.hpp"
#include "quench/quadrature.hpp"
#include "quench/square_well.hpp"
#include "quench/wigner.hpp"

namespace quench::report {

namespace {

using free::EvolutionMethod;
using harmonic::InitialLevel;
using harmonic::QuenchParams;
using well::WellState;

template <class... Args>
std::string fmt(const char* format, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

struct Outcome {
  bool pass;
  std::string detail;
};

CheckResult run(std::string id, const std::function<Outcome()>& body,
                double limit = std::numeric_limits<double>::infinity()) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s > limit) {
    o.pass = false;
    o.detail += fmt("; runtime %.2f s exceeds %.0f s", s, limit);
  }
  return {std::move(id), o.pass, std::move(o.detail), s};
}

std::vector<WellState> three_branches() {
  return {WellState::infinite(), WellState::delta(1.0), WellState::finite(kPi / 3.0)};
}

const char* branch_name(const WellState& w) {
  switch (w.branch()) {
    case well::WellBranch::InfiniteWell: return "infinite";
    case well::WellBranch::DeltaWell: return "delta";
    case well::WellBranch::FiniteWell: return "finite";
  }
  return "?";
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Position of the extremum of f bracketed by [lo, hi]; sign = +1 for a
// minimum, -1 for a maximum.
double refine_extremum(const std::function<double(double)>& f, double lo, double hi, double sign) {
  return boost::math::tools::brent_find_minima([&](double t) { return sign * f(t); }, lo, hi, 40)
      .first;
}

// Index of the deepest (sign=+1) or highest (sign=-1) strict interior
// extremum of v; v.size() if there is none.
std::size_t interior_extremum(const std::vector<double>& v, double sign) {
  std::size_t best = v.size();
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const double c = sign * v[i];
    if (c < sign * v[i - 1] && c <= sign * v[i + 1] && (best == v.size() || c < sign * v[best])) {
      best = i;
    }
  }
  return best;
}

// Integral over x >= 0 of an even density whose far field oscillates like
// cos^2(x / t) and decays algebraically.
double integrate_even_density(const std::function<double(double)>& f, double t, double x_max,
                              const Tolerances& tol) {
  std::vector<double> points{0.0};
  double x = 0.0;
  while (x < x_max) {
    double h = std::max(t > 0.0 ? std::min(0.25, std::sqrt(t) / 4.0) : 0.25, 0.05 * x);
    if (t > 0.0) h = std::min(h, kPi * t);
    x = std::min(x + h, x_max);
    points.push_back(x);
  }
  if (1.0 < x_max) points.push_back(1.0);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return 2.0 * quad::integrate(f, points, {tol.quad_abs, 1e-3 * tol.quad_rel}).value;
}

// ---------------------------------------------------------------- criteria

Outcome criterion_1() {
  const auto p = QuenchParams::with_shift(1.0, 0.5, 1.0);
  auto product = [&](double phase) { return 2.0 * harmonic::uncertainty_product(p, phase / p.omega_f); };
  double worst = 0.0;
  for (double phase : {0.0, kPi / 2.0, kPi}) worst = std::max(worst, std::abs(product(phase) - 1.0));

  const TimeGrid scan(0.0, kPi, 2001);
  std::size_t best = 0;
  for (std::size_t i = 1; i < scan.size(); ++i) {
    if (product(scan[i]) > product(scan[best])) best = i;
  }
  const double lo = scan[best > 0 ? best - 1 : 0];
  const double hi = scan[std::min(best + 1, scan.size() - 1)];
  const double at = refine_extremum(product, lo, hi, -1.0);
  const double peak = product(at);
  return {worst <= 1e-10 && std::abs(peak - 1.25) <= 1e-6,
          fmt("2 dx dp / hbar at omega_f t in {0, pi/2, pi} off by %.1e; peak %.10f at omega_f t = %.6f",
              worst, peak, at)};
}

Outcome criterion_2(Exec exec) {
  struct Case {
    QuenchParams params;
    double x_lo, x_hi, t_max;
  };
  const Case cases[] = {{QuenchParams::with_shift(1.0, 0.5, 1.0), -4.0, 6.0, 8.0 * kPi},
                        {QuenchParams{1.0, 0.0, 1.0}, -4.0, 16.0, 5.0}};
  double worst = 0.0;
  for (const auto& c : cases) {
    const SpatialGrid x(c.x_lo, c.x_hi, 101);
    const TimeGrid times(0.0, c.t_max, 101);
    for (std::size_t j = 0; j < times.size(); ++j) {
      const double t = times[j];
      const auto q = harmonic::density(c.params, t, x, InitialLevel::Ground, {}, exec);
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double cl = classical::classical_harmonic_density(
            c.params, classical::TemperatureChoice::matched(c.params.omega_i), x[i], t);
        worst = std::max(worst, std::abs(cl - q.values[i]));
      }
    }
  }
  return {worst <= 1e-10,
          fmt("max |rho_cl - rho_qm| = %.2e over 2 x 101 x 101 (x, t) points (omega_f/omega_i = 1/2 "
              "and the linear potential)",
              worst)};
}

Outcome criterion_3(Exec exec) {
  const auto w = WellState::infinite();
  auto rho = [&](double t) { return std::norm(free::evolve_momentum(w, 0.0, t)); };
  const double r0 = rho(0.0);
  const TimeGrid g(0.0, 0.3, 301);
  std::vector<double> v(g.size());
  fill(v, [&](std::size_t i) { return rho(g[i]); }, exec);
  const auto imin = interior_extremum(v, 1.0);
  const auto imax = interior_extremum(v, -1.0);
  if (imin == v.size() || imax == v.size()) return {false, "no interior extremum found"};
  const double tmin = refine_extremum(rho, g[imin - 1], g[imin + 1], 1.0);
  const double tmax = refine_extremum(rho, g[imax - 1], g[imax + 1], -1.0);
  const double r128 = rho(0.128);
  const bool pass = std::abs(r0 - 1.0) <= 1e-12 && std::abs(tmin - 0.071) <= 0.005 &&
                    std::abs(tmax - 0.128) <= 0.005 && r128 > 1.0;
  return {pass, fmt("a rho(0,0) = %.12f; deepest minimum %.6f at t = %.5f; highest maximum %.6f at "
                    "t = %.5f; a rho(0, 0.128) = %.6f",
                    r0, rho(tmin), tmin, rho(tmax), tmax, r128)};
}

Outcome criterion_4(Exec exec) {
  const SpatialGrid x(-5.0, 5.0, 201);
  double worst_route = 0.0;
  std::string where;
  for (const auto& w : three_branches()) {
    for (double t : {0.1, 1.0}) {
      std::vector<double> diff(x.size());
      fill(
          diff,
          [&](std::size_t i) {
            return std::abs(free::evolve_momentum(w, x[i], t) - free::evolve_propagator(w, x[i], t));
          },
          exec);
      const double m = *std::max_element(diff.begin(), diff.end());
      if (m >= worst_route) {
        worst_route = m;
        where = fmt("%s, t = %g", branch_name(w), t);
      }
    }
  }

  const auto w = WellState::infinite();
  const SpatialGrid xs(-2.0, 2.0, 81);
  const MomentumGrid ks(-60.0, 60.0, 24001);
  const auto field =
      wigner::wigner_field(w, wigner::WignerSource::ClosedFormInfiniteWell, xs, ks, {}, exec);
  double worst_shear = 0.0;
  for (double t : {0.07, 0.14}) {
    const auto marginal = wigner::marginal_x(wigner::shear_evolve(field, t, exec));
    const auto direct = free::density_profile(w, t, xs, EvolutionMethod::MomentumIntegral, {}, exec);
    worst_shear = std::max(worst_shear, max_abs_diff(marginal.values, direct.values));
  }
  return {worst_route < 1e-6 && worst_shear < 1e-3,
          fmt("max |psi_momentum - psi_propagator| = %.2e (worst: %s); max |sheared-Wigner marginal - "
              "rho| = %.2e",
              worst_route, where.c_str(), worst_shear)};
}

Outcome criterion_5() {
  double worst = 0.0;
  std::string where;
  for (const auto& w : three_branches()) {
    for (double t : {0.5, 1.0, 2.0}) {
      const double direct = free::density_second_moment(w, t);
      const double law = free::width_qm(w, t);
      const double rel = std::abs(direct - law) / law;
      if (rel >= worst) {
        worst = rel;
        where = fmt("%s, t = %g: %.10f vs %.10f", branch_name(w), t, direct, law);
      }
    }
  }
  return {worst < 1e-4, fmt("max relative deviation %.2e (%s)", worst, where.c_str())};
}

Outcome criterion_6(Exec exec) {
  const auto w = WellState::infinite();
  const SpatialGrid u(-6.0, 6.0, 241);
  std::vector<double> limit(u.size());
  fill(limit, [&](std::size_t i) { return free::longtime_limit(w, u[i]); }, exec);
  const double peak = *std::max_element(limit.begin(), limit.end());
  auto deviation = [&](double t) {
    return max_abs_diff(
        free::longtime_scaled_profile(w, t, u, EvolutionMethod::MomentumIntegral, {}, exec).values,
        limit);
  };
  const double d10 = deviation(10.0);
  const double d1 = deviation(1.0);
  return {d10 < 0.02 * peak && d1 > d10,
          fmt("sup deviation at t = 10: %.4f%% of peak; at t = 1: %.4f%% of peak", 100.0 * d10 / peak,
              100.0 * d1 / peak)};
}

Outcome criterion_7() {
  const auto w = WellState::infinite();
  const Tolerances tol;
  double marg = 0.0;
  for (double x : {0.0, 0.25, 0.5, 0.75, 0.95}) {
    marg = std::max(marg, std::abs(wigner::position_marginal(x) - std::norm(well::psi0(w, x))));
  }
  for (double k : {0.0, 1.0, kPi / 2.0, 3.0, 7.5}) {
    const double amp = well::psi0_momentum(w, k);
    marg = std::max(marg, std::abs(wigner::momentum_marginal(k) - amp * amp));
  }

  const auto wf = wigner::WaveFunction::from_well(w);
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  std::uniform_real_distribution<double> uk(-15.0, 15.0);
  double closed = 0.0;
  for (int n = 0; n < 50; ++n) {
    const double x = ux(rng);
    const double k = uk(rng);
    closed = std::max(closed,
                      std::abs(wigner::wigner_infinite_well(x, k) - wigner::wigner_from_psi(wf, x, k)));
  }

  double most_negative = 0.0;
  for (double x : {0.0, 0.5}) {
    for (int i = 0; i <= 800; ++i) {
      most_negative = std::min(most_negative, wigner::wigner_infinite_well(x, 0.01 * i));
    }
  }

  const auto gauss = wigner::WaveFunction::oscillator_ground(1.0);
  double hudson = 0.0;
  double gauss_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 12; ++i) {
    for (int j = 0; j <= 12; ++j) {
      const double x = -3.0 + 0.5 * i;
      const double p = -3.0 + 0.5 * j;
      const double v = wigner::wigner_from_psi(gauss, x, p);
      const double product = std::exp(-x * x - p * p) / kPi;
      hudson = std::max(hudson, std::abs(v - product));
      gauss_min = std::min(gauss_min, v);
    }
  }

  const bool pass = marg < 1e-4 && closed <= 1e-8 && most_negative < -1e-3 && hudson <= 1e-8 &&
                    gauss_min >= -tol.quad_abs;
  return {pass, fmt("marginal error %.2e; closed form vs quadrature %.2e at 50 points; min W = %.4f; "
                    "Gaussian |W - psi^2 psi~^2| = %.2e, min %.2e",
                    marg, closed, most_negative, hudson, gauss_min)};
}

Outcome criterion_8(Exec exec) {
  const auto w = WellState::infinite();
  const auto e = classical::ClassicalEnsemble::from_well(w);
  const double r0 = classical::classical_free_density(e, 0.0, 0.0);
  const TimeGrid g(0.0, 3.0, 601);
  std::vector<double> v(g.size() - 1);
  fill(v, [&](std::size_t i) { return classical::classical_free_density(e, 0.0, g[i + 1]); }, exec);
  const double cl_max = *std::max_element(v.begin(), v.end());
  const double q0 = std::norm(free::evolve_momentum(w, 0.0, 0.0));
  const double q128 = std::norm(free::evolve_momentum(w, 0.0, 0.128));
  return {cl_max < r0 && q128 > q0,
          fmt("classical: max over 600 times in (0, 3] of a rho_cl(0,t) = %.9f < %.9f; quantum: a rho(0, "
              "0.128) = %.6f > %.6f",
              cl_max, r0, q128, q0)};
}

// ---------------------------------------------------------------- invariants

void add(std::vector<CheckResult>& out, std::string id, const std::function<Outcome()>& body) {
  out.push_back(run(std::move(id), body));
}

void core_suite(std::vector<CheckResult>& out) {
  add(out, "core/sinc-continuity", [] {
    double worst = 0.0;
    for (double window : {1e-4, 1e-2}) {
      for (double s : {1.0 - 1e-9, 1.0 + 1e-9}) {
        const double u = s * window;
        worst = std::max(worst, std::abs(sinc(u, window) - std::sin(u) / u));
      }
    }
    return Outcome{worst < 1e-15 && sinc(0.0) == 1.0,
                   fmt("max jump across the Taylor window %.1e", worst)};
  });
  add(out, "core/unit-conversion-normalization", [] {
    const auto params = QuenchParams{1.0, 1.0, 0.0};
    const auto d = harmonic::density(params, 0.0, SpatialGrid(-10.0, 10.0, 2001));
    const auto converted =
        convert_units(d, UnitSystem::oscillator(1.0), UnitSystem::oscillator(4.0));
    const auto back = convert_units(converted, UnitSystem::oscillator(4.0), UnitSystem::oscillator(1.0));
    const double dn = std::abs(integrate_density(converted) - integrate_density(d));
    const double dv = max_abs_diff(back.values, d.values);
    return Outcome{dn < 1e-12 && dv < 1e-14,
                   fmt("normalization change %.1e; round trip %.1e", dn, dv)};
  });
}

void harmonic_suite(std::vector<CheckResult>& out, Exec exec) {
  const auto p = QuenchParams::with_shift(1.0, 0.5, 1.0);
  add(out, "harmonic/normalization", [&] {
    double worst = 0.0;
    const SpatialGrid grid(-16.0, 20.0, 3601);
    for (auto level : {InitialLevel::Ground, InitialLevel::First, InitialLevel::Second}) {
      for (double t : {0.0, 1.3, 4.0}) {
        worst = std::max(worst,
                         std::abs(integrate_density(harmonic::density(p, t, grid, level, {}, exec)) - 1.0));
      }
    }
    return Outcome{worst < 1e-8, fmt("max |integral - 1| = %.2e (levels 0-2)", worst)};
  });
  add(out, "harmonic/periodicity", [&] {
    const double period = 2.0 * kPi / p.omega_f;
    double worst = 0.0;
    for (double t : {0.3, 1.7, 5.2}) {
      worst = std::max(worst, std::abs(harmonic::mean_position(p, t) - harmonic::mean_position(p, t + period)));
      worst = std::max(worst, std::abs(harmonic::variance_x(p, t) - harmonic::variance_x(p, t + period / 2.0)));
      worst = std::max(worst, std::abs(harmonic::variance_p(p, t) - harmonic::variance_p(p, t + period / 2.0)));
    }
    return Outcome{worst < 1e-12, fmt("max deviation after one period %.1e", worst)};
  });
  add(out, "harmonic/uncertainty-bound", [&] {
    double lowest = std::numeric_limits<double>::infinity();
    for (double ratio : {0.1, 0.5, 1.0, 2.0, 7.0}) {
      const auto q = QuenchParams::with_shift(1.0, ratio, 1.0);
      for (int i = 0; i <= 2000; ++i) {
        lowest = std::min(lowest, harmonic::uncertainty_product(q, 0.01 * i));
      }
    }
    return Outcome{lowest >= 0.5 - 1e-12, fmt("min Delta x Delta p = %.15f", lowest)};
  });
  add(out, "harmonic/linear-limit-continuity", [] {
    const QuenchParams slow{1.0, 1e-4, 0.0};
    const QuenchParams linear{1.0, 0.0, 0.0};
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double t = 0.1 * i;
      const double a = harmonic::variance_x(slow, t);
      const double b = harmonic::variance_x(linear, t);
      worst = std::max(worst, std::abs(a - b) / b);
    }
    return Outcome{worst < 1e-4, fmt("max relative deviation %.2e for t <= 10", worst)};
  });
  add(out, "harmonic/equivalence-shift", [] {
    const SpatialGrid grid(-10.0, 20.0, 601);
    const double a = harmonic::equivalence_shift_check(QuenchParams{1.0, 0.0, 1.0}, 2.0, grid);
    const double b = harmonic::equivalence_shift_check(QuenchParams{1.0, 0.0, 3.0}, 0.5, grid,
                                                       InitialLevel::Second);
    return Outcome{a <= 1e-10 && b <= 1e-10, fmt("max deviation %.1e (ground), %.1e (level 2)", a, b)};
  });
  add(out, "harmonic/level2-node", [] {
    const double node = std::sqrt(0.5);
    const auto d = harmonic::density(QuenchParams{1.0, 1.0, 0.0}, 0.0, SpatialGrid(-node, node, 2),
                                     InitialLevel::Second);
    const double worst = std::max(std::abs(d.values[0]), std::abs(d.values[1]));
    return Outcome{worst < 1e-8, fmt("rho at x = +-1/sqrt(2): %.1e", worst)};
  });
}

void well_suite(std::vector<CheckResult>& out) {
  const std::vector<WellState> states{WellState::infinite(), WellState::delta(1.0),
                                      WellState::finite(kPi / 3.0), WellState::finite(kPi / 2.5)};
  add(out, "square_well/normalization", [&] {
    double worst = 0.0;
    for (const auto& w : states) {
      worst = std::max(worst, std::abs(free::total_probability(w, 0.0) - 1.0));
    }
    return Outcome{worst < 1e-10, fmt("max |integral psi0^2 - 1| = %.1e", worst)};
  });
  add(out, "square_well/parseval", [&] {
    double worst = 0.0;
    for (const auto& w : states) {
      const double K = 1e4;
      const auto points = quad::oscillation_breakpoints(
          0.0, K, [&](double) { return 2.0 * w.oscillation_length(); }, 1.0,
          std::vector<double>{w.k0()});
      const double body = quad::integrate(
                              [&](double k) {
                                const double v = well::psi0_momentum(w, k);
                                return v * v;
                              },
                              points)
                              .value;
      worst = std::max(worst, std::abs(2.0 * body - 1.0));
    }
    return Outcome{worst < 1e-6, fmt("max |integral psi0~^2 - 1| = %.1e (|k| <= 1e4)", worst)};
  });
  add(out, "square_well/parity", [&] {
    double worst = 0.0;
    for (const auto& w : states) {
      for (int i = 0; i <= 200; ++i) {
        const double x = 0.03 * i;
        worst = std::max(worst, std::abs(well::psi0(w, x) - well::psi0(w, -x)));
        worst = std::max(worst, std::abs(well::psi0_momentum(w, x) - well::psi0_momentum(w, -x)));
      }
    }
    return Outcome{worst == 0.0, fmt("max |f(x) - f(-x)| = %.1e", worst)};
  });
  add(out, "square_well/removable-singularity", [&] {
    double worst = 0.0;
    bool finite = true;
    for (const auto& w : states) {
      if (w.branch() == well::WellBranch::DeltaWell) continue;
      const double k0 = w.k0();
      for (double rel : {1e-9, 1e-7, 1e-5, 1e-3}) {
        const double below = well::psi0_momentum(w, k0 * (1.0 - rel));
        const double at = well::psi0_momentum(w, k0);
        const double above = well::psi0_momentum(w, k0 * (1.0 + rel));
        // Smooth function: the midpoint deviates by O(rel^2).
        worst = std::max(worst, std::abs(0.5 * (below + above) - at) / (rel * rel + 1e-12));
      }
      for (int i = -1000; i <= 1000; ++i) {
        finite = finite && std::isfinite(well::psi0_momentum(w, k0 * (1.0 + 1e-6 * i)));
      }
    }
    return Outcome{worst < 10.0 && finite,
                   fmt("max |midpoint - value| / (rel^2 + 1e-12) = %.2f; all finite: %s", worst,
                       finite ? "yes" : "no")};
  });
  add(out, "square_well/infinite-limit", [] {
    const auto near = WellState::finite(kPi / 2.0 - 1e-4);
    const auto box = WellState::infinite();
    double dx = 0.0;
    double mx = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double x = -2.0 + 0.01 * i;
      dx = std::max(dx, std::abs(well::psi0(near, x) - well::psi0(box, x)));
      mx = std::max(mx, std::abs(well::psi0(box, x)));
    }
    double dk = 0.0;
    double mk = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double k = -20.0 + 0.1 * i;
      dk = std::max(dk, std::abs(well::psi0_momentum(near, k) - well::psi0_momentum(box, k)));
      mk = std::max(mk, std::abs(well::psi0_momentum(box, k)));
    }
    return Outcome{dx < 0.01 * mx && dk < 0.01 * mk,
                   fmt("sup deviation %.3f%% (position), %.3f%% (momentum)", 100.0 * dx / mx,
                       100.0 * dk / mk)};
  });
}

void free_suite(std::vector<CheckResult>& out, Exec exec) {
  add(out, "free_evolution/unitarity", [] {
    double worst = 0.0;
    const auto w = WellState::infinite();
    for (double t : {0.07, 0.14, 0.28, 1.0, 10.0}) {
      worst = std::max(worst, std::abs(free::total_probability(w, t) - 1.0));
    }
    for (const auto& v : {WellState::delta(1.0), WellState::finite(kPi / 3.0)}) {
      worst = std::max(worst, std::abs(free::total_probability(v, 1.0) - 1.0));
    }
    return Outcome{worst < 1e-6, fmt("max |integral rho - 1| = %.1e", worst)};
  });
  add(out, "free_evolution/parity", [&] {
    double worst = 0.0;
    const SpatialGrid x(0.0, 5.0, 51);
    for (const auto& w : three_branches()) {
      std::vector<double> d(x.size());
      fill(
          d,
          [&](std::size_t i) {
            return std::abs(std::norm(free::evolve_momentum(w, x[i], 0.2)) -
                            std::norm(free::evolve_momentum(w, -x[i], 0.2)));
          },
          exec);
      worst = std::max(worst, *std::max_element(d.begin(), d.end()));
    }
    return Outcome{worst < 1e-8, fmt("max |rho(x) - rho(-x)| = %.1e at t = 0.2", worst)};
  });
  add(out, "free_evolution/short-time-continuity", [&] {
    const auto w = WellState::infinite();
    const SpatialGrid x(-1.5, 1.5, 61);
    std::vector<double> d(x.size());
    fill(
        d,
        [&](std::size_t i) {
          return std::abs(std::norm(free::evolve_propagator(w, x[i], 1e-4)) -
                          std::norm(well::psi0(w, x[i])));
        },
        exec);
    const double worst = *std::max_element(d.begin(), d.end());
    return Outcome{worst < 1e-2, fmt("sup |rho(x, 1e-4) - psi0^2| = %.2e", worst)};
  });
  add(out, "free_evolution/long-time-propagator", [&] {
    const auto w = WellState::infinite();
    const SpatialGrid u(-6.0, 6.0, 241);
    const auto prof = free::longtime_scaled_profile(w, 20.0, u, EvolutionMethod::Propagator, {}, exec);
    double dev = 0.0;
    double peak = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double lim = free::longtime_limit(w, u[i]);
      dev = std::max(dev, std::abs(prof.values[i] - lim));
      peak = std::max(peak, lim);
    }
    return Outcome{dev < 0.01 * peak, fmt("sup deviation at t = 20: %.3f%% of peak", 100.0 * dev / peak)};
  });
  add(out, "free_evolution/depth-ordering", [&] {
    // Deepest interior dip of a rho(0, t), t <= 0.3, relative to a rho(0, 0).
    const TimeGrid g(0.0, 0.3, 301);
    std::vector<double> dips;
    std::vector<double> lows;
    for (double div : {2.0, 2.5, 3.0}) {
      const auto w = WellState::from_k0a(kPi / div);
      std::vector<double> v(g.size());
      fill(v, [&](std::size_t i) { return std::norm(free::evolve_momentum(w, 0.0, g[i])); }, exec);
      const auto i = interior_extremum(v, 1.0);
      dips.push_back(i == v.size() ? 1.0 : v[i] / v[0]);
      lows.push_back(*std::min_element(v.begin(), v.end()));
    }
    return Outcome{dips[0] < dips[1] && dips[1] < dips[2],
                   fmt("deepest dip rho(0,t)/rho(0,0): %.6f (pi/2) < %.6f (pi/2.5) < %.6f (pi/3); "
                       "unnormalized minima %.6f, %.6f, %.6f",
                       dips[0], dips[1], dips[2], lows[0], lows[1], lows[2])};
  });
}

void wigner_suite(std::vector<CheckResult>& out, Exec exec) {
  const auto box = WellState::infinite();
  add(out, "wigner/reality", [&] {
    const Tolerances tol;
    double worst = 0.0;
    const std::vector<wigner::WaveFunction> states{
        wigner::WaveFunction::from_well(box),
        wigner::WaveFunction::from_well(WellState::finite(kPi / 3.0)),
        wigner::WaveFunction::oscillator_ground(1.0)};
    for (const auto& wf : states) {
      for (double x : {0.0, 0.3, 0.8}) {
        for (double p : {-2.0, 0.0, 1.1, 4.0}) {
          worst = std::max(worst, std::abs(wigner::wigner_integral(wf, x, p).imag()));
        }
      }
    }
    return Outcome{worst < tol.quad_abs, fmt("max |Im W| = %.1e", worst)};
  });
  add(out, "wigner/momentum-reflection", [&] {
    const auto wf = wigner::WaveFunction::from_well(WellState::finite(kPi / 2.5));
    double worst = 0.0;
    for (double x : {0.1, 0.7}) {
      for (double p : {0.5, 2.0}) {
        worst = std::max(worst, std::abs(wigner::wigner_from_psi(wf, x, p) -
                                         wigner::wigner_from_psi(wf, x, -p)));
        worst = std::max(worst, std::abs(wigner::wigner_infinite_well(x, p) -
                                         wigner::wigner_infinite_well(x, -p)));
      }
    }
    return Outcome{worst < 1e-10, fmt("max |W(x,p) - W(x,-p)| = %.1e", worst)};
  });
  add(out, "wigner/field-normalization", [&] {
    const SpatialGrid x(-1.0, 1.0, 801);
    const MomentumGrid k(-80.0, 80.0, 6401);
    const auto field = wigner::wigner_field(box, wigner::WignerSource::ClosedFormInfiniteWell, x, k, {}, exec);
    const double total = integrate_density(wigner::marginal_x(field));
    return Outcome{std::abs(total - 1.0) < 1e-5, fmt("double integral - 1 = %.2e", total - 1.0)};
  });
  add(out, "wigner/factorized-nonnegative", [&] {
    const SpatialGrid x(-2.0, 2.0, 81);
    const MomentumGrid k(-15.0, 15.0, 301);
    double lowest = std::numeric_limits<double>::infinity();
    for (const auto& w : three_branches()) {
      const auto field = wigner::wigner_field(w, wigner::WignerSource::FactorizedApprox, x, k, {}, exec);
      lowest = std::min(lowest, wigner::min_value(field));
    }
    const double gap = std::abs(wigner::factorized_approx(box, 0.0, 2.0) -
                                wigner::wigner_infinite_well(0.0, 2.0));
    return Outcome{lowest >= 0.0 && gap > 1e-3,
                   fmt("min factorized value %.1e; |factorized - W| at (0, ak = 2) = %.4f", lowest, gap)};
  });
  add(out, "wigner/removable-singularity", [] {
    double worst = 0.0;
    for (double x : {0.0, 0.4, -0.9}) {
      for (double k0 : {kPi / 2.0, -kPi / 2.0, 0.0}) {
        for (double h : {1e-8, 1e-6, 1e-4}) {
          const double mid = 0.5 * (wigner::wigner_infinite_well(x, k0 - h) +
                                    wigner::wigner_infinite_well(x, k0 + h));
          worst = std::max(worst, std::abs(mid - wigner::wigner_infinite_well(x, k0)) / (h * h + 1e-12));
        }
      }
    }
    return Outcome{worst < 10.0, fmt("max |midpoint - value| / (h^2 + 1e-12) = %.2f", worst)};
  });
  add(out, "wigner/small-k-limit", [&] {
    const auto wf = wigner::WaveFunction::from_well(box);
    double worst = 0.0;
    for (double x : {0.0, 0.2, 0.6, 0.95}) {
      for (double k : {0.0, 1e-7, 1e-3}) {
        worst = std::max(worst, std::abs(wigner::wigner_infinite_well(x, k) - wigner::wigner_from_psi(wf, x, k)));
      }
    }
    return Outcome{worst < 1e-8, fmt("closed form vs quadrature near k = 0: %.1e", worst)};
  });
  add(out, "wigner/shear", [&] {
    const SpatialGrid x(-2.0, 2.0, 401);
    const MomentumGrid k(-10.0, 10.0, 2001);
    const auto field = wigner::wigner_field(box, wigner::WignerSource::ClosedFormInfiniteWell, x, k, {}, exec);
    const auto same = wigner::shear_evolve(field, 0.0, exec);
    const double identity = max_abs_diff(same.values, field.values);
    const auto p0 = wigner::marginal_p(field);
    const auto p1 = wigner::marginal_p(wigner::shear_evolve(field, 0.07, exec));
    const double drift = max_abs_diff(p0.values, p1.values);
    return Outcome{identity == 0.0 && drift < 1e-4,
                   fmt("t = 0 shear changes %.1e; momentum marginal drift %.2e", identity, drift)};
  });
  add(out, "wigner/interpolated-shear", [&] {
    // Quadrature-sourced fields shear by interpolation; refining the grid must
    // reduce the error against the exact sheared field.
    const double t = 0.1;
    double err[2];
    int n = 0;
    for (std::size_t nx : {101, 401}) {
      const SpatialGrid x(-1.6, 1.6, nx);
      const MomentumGrid k(-4.0, 4.0, 81);
      auto field = wigner::wigner_field(box, wigner::WignerSource::ClosedFormInfiniteWell, x, k, {}, exec);
      field.initial = nullptr;
      const auto moved = wigner::shear_evolve(field, t, exec);
      double e = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < k.size(); ++j) {
          e = std::max(e, std::abs(moved.at(i, j) - wigner::wigner_infinite_well(x[i] - k[j] * t, k[j])));
        }
      }
      err[n++] = e;
    }
    return Outcome{err[1] < 0.25 * err[0] && err[1] < 1e-3,
                   fmt("max interpolation error %.2e (101 points) -> %.2e (401 points)", err[0], err[1])};
  });
}

void classical_suite(std::vector<CheckResult>& out, Exec exec) {
  const auto box = WellState::infinite();
  const auto e = classical::ClassicalEnsemble::from_well(box);
  add(out, "classical/factor-normalization", [&] {
    const Tolerances tol;
    const double nx = free::total_probability(box, 0.0);
    const auto thermal = classical::ClassicalEnsemble::thermal(1.0, 0.7);
    const double tx = quad::integrate([&](double x) { return thermal.rho_x(x); }, -20.0, 20.0).value;
    const double tp = quad::integrate([&](double p) { return thermal.rho_p(p); }, -20.0, 20.0).value;
    const double worst = std::max({std::abs(nx - 1.0), std::abs(tx - 1.0), std::abs(tp - 1.0)});
    return Outcome{worst < 1e-8, fmt("max |integral - 1| = %.1e", worst)};
  });
  add(out, "classical/normalization", [&] {
    const Tolerances tol;
    double worst = 0.0;
    for (double t : {0.0, 0.1, 1.0, 5.0}) {
      const double total = integrate_even_density(
          [&](double x) { return classical::classical_free_density(e, x, t); }, t, 1.0 + 200.0 * t, tol);
      worst = std::max(worst, std::abs(total - 1.0));
    }
    return Outcome{worst < 1e-6, fmt("max |integral rho_cl - 1| = %.1e", worst)};
  });
  add(out, "classical/width-identity", [&] {
    double worst = 0.0;
    for (const auto& w : three_branches()) {
      const auto ens = classical::ClassicalEnsemble::from_well(w);
      for (double t : {0.0, 0.5, 1.0, 2.0}) {
        worst = std::max(worst, std::abs(classical::classical_width(ens, t) - free::width_qm(w, t)));
      }
    }
    const double delta = classical::classical_width(
        classical::ClassicalEnsemble::from_well(WellState::delta(1.0)), 1.0);
    return Outcome{worst <= 1e-14 && std::abs(delta - 1.5) < 1e-8,
                   fmt("max |classical - quantum| = %.1e; delta well width at t = 1: %.10f", worst, delta)};
  });
  add(out, "classical/route-agreement", [&] {
    double worst = 0.0;
    for (const auto& w : three_branches()) {
      const auto ens = classical::ClassicalEnsemble::from_well(w);
      for (double t : {0.2, 1.5}) {
        const double a = classical::classical_free_density(ens, 0.5, t, classical::FreeRoute::Trajectory);
        const double b = classical::classical_free_density(ens, 0.5, t, classical::FreeRoute::PositionFirst);
        worst = std::max(worst, std::abs(a - b));
      }
    }
    return Outcome{worst < 1e-6, fmt("max |trajectory - position-first| = %.1e at x = a/2", worst)};
  });
  add(out, "classical/long-time", [&] {
    const SpatialGrid u(-6.0, 6.0, 241);
    double dev = 0.0;
    double peak = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double lim = classical::classical_longtime(e, u[i]);
      dev = std::max(dev, std::abs(20.0 * classical::classical_free_density(e, u[i] * 20.0, 20.0) - lim));
      peak = std::max(peak, lim);
      norm += lim * u.step();
    }
    const double limit_quantum = std::abs(classical::classical_longtime(e, 0.7) - free::longtime_limit(box, 0.7));
    return Outcome{dev < 0.01 * peak && limit_quantum == 0.0,
                   fmt("sup deviation at t = 20: %.3f%% of peak; classical and quantum limits differ by %.1e",
                       100.0 * dev / peak, limit_quantum)};
  });
  add(out, "classical/origin-decay", [&] {
    double worst = -std::numeric_limits<double>::infinity();
    const double r0 = classical::classical_free_density(e, 0.0, 0.0);
    for (const auto& w : {WellState::delta(1.0), WellState::finite(kPi / 3.0)}) {
      const auto ens = classical::ClassicalEnsemble::from_well(w);
      const double s0 = classical::classical_free_density(ens, 0.0, 0.0);
      for (int i = 1; i <= 100; ++i) {
        worst = std::max(worst, classical::classical_free_density(ens, 0.0, 0.01 * i) - s0);
      }
    }
    for (int i = 1; i <= 100; ++i) {
      worst = std::max(worst, classical::classical_free_density(e, 0.0, 0.003 * i) - r0);
    }
    return Outcome{worst < 0.0, fmt("max rho_cl(0, t) - rho_cl(0, 0) = %.2e over t > 0", worst)};
  });
  add(out, "classical/quantum-comparison", [&] {
    const TimeGrid g(0.0, 3.0, 301);
    double late = 0.0;
    double early_min = std::numeric_limits<double>::infinity();
    for (double x : {0.0, 1.0, 2.0}) {
      double early = 0.0;
      std::vector<double> rel(g.size());
      fill(
          rel,
          [&](std::size_t i) {
            const double q = std::norm(free::evolve_momentum(box, x, g[i]));
            const double c = classical::classical_free_density(e, x, g[i]);
            return std::abs(q - c) / q;
          },
          exec);
      for (std::size_t i = 1; i < g.size(); ++i) {
        if (g[i] >= 1.5) late = std::max(late, rel[i]);
        if (g[i] < 0.3) early = std::max(early, rel[i]);
      }
      early_min = std::min(early_min, early);
    }
    return Outcome{late < 0.10 && early_min > 0.15,
                   fmt("max relative gap for t >= 1.5: %.2f%%; smallest early (t < 0.3) maximum gap over "
                       "x/a in {0,1,2}: %.1f%%",
                       100.0 * late, 100.0 * early_min)};
  });
  add(out, "classical/harmonic", [] {
    const QuenchParams same{1.0, 1.0, 0.0};
    const auto thermal = classical::ClassicalEnsemble::thermal(1.0, 0.8);
    double drift = 0.0;
    for (double t : {0.4, 1.9, 3.3}) {
      drift = std::max(drift, std::abs(classical::classical_harmonic_density(same, thermal, 0.3, t) -
                                       classical::classical_harmonic_density(same, thermal, 0.3, 0.0)));
    }
    bool rejected = false;
    try {
      classical::classical_harmonic_density(same, classical::ClassicalEnsemble::from_well(WellState::infinite()),
                                            0.0, 1.0);
    } catch (const Error& err) {
      rejected = err.code() == ErrorCode::UnsupportedEnsemble;
    }
    return Outcome{drift < 1e-14 && rejected,
                   fmt("stationary thermal drift %.1e; non-Gaussian ensemble rejected: %s", drift,
                       rejected ? "yes" : "no")};
  });
}

}  // namespace

CheckResult criterion(int n, Exec exec) {
  const std::string id = "criterion_" + std::to_string(n);
  switch (n) {
    case 1: return run(id, criterion_1, 1.0);
    case 2: return run(id, [&] { return criterion_2(exec); }, 1.0);
    case 3: return run(id, [&] { return criterion_3(exec); }, 30.0);
    case 4: return run(id, [&] { return criterion_4(exec); }, 60.0);
    case 5: return run(id, criterion_5);
    case 6: return run(id, [&] { return criterion_6(exec); });
    case 7: return run(id, criterion_7);
    case 8: return run(id, [&] { return criterion_8(exec); });
    default: throw Error(ErrorCode::InvalidParams, "criterion number must lie in 1..8");
  }
}

std::vector<CheckResult> invariant_suites(Exec exec) {
  std::vector<CheckResult> out;
  core_suite(out);
  harmonic_suite(out, exec);
  well_suite(out);
  free_suite(out, exec);
  wigner_suite(out, exec);
  classical_suite(out, exec);
  return out;
}

std::vector<CheckResult> run_report(Exec exec) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> out;
  for (int n = 1; n <= 8; ++n) out.push_back(criterion(n, exec));
  const auto invariants = invariant_suites(exec);
  out.insert(out.end(), invariants.begin(), invariants.end());
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t failed = 0;
  for (const auto& r : invariants) failed += r.pass ? 0 : 1;
  std::string criteria_failed;
  for (int n = 0; n < 8; ++n) {
    if (!out[static_cast<std::size_t>(n)].pass) criteria_failed += " " + out[static_cast<std::size_t>(n)].id;
  }
  if (criteria_failed.empty()) criteria_failed = " none";
  out.push_back({"criterion_9", failed == 0 && total < 180.0,
                 fmt("%zu of %zu invariant checks failed; full report %.1f s (limit 180 s); failing "
                     "criteria among 1-8:%s",
                     failed, invariants.size(), total, criteria_failed.c_str()),
                 total});
  return out;
}

void write_report(std::ostream& out, const std::vector<CheckResult>& results) {
  out << "check,status,seconds,detail\n";
  char secs[32];
  for (const auto& r : results) {
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    std::string detail = r.detail;
    std::replace(detail.begin(), detail.end(), '"', '\'');
    out << r.id << ',' << (r.pass ? "PASS" : "FAIL") << ',' << secs << ",\"" << detail << "\"\n";
  }
}

}  // namespace quench::report
