#include "quench/figures.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "quench/classical.hpp"
#include "quench/defaults.hpp"
#include "quench/free_evolution.hpp"
#include "quench/harmonic_quench.hpp"
#include "quench/square_well.hpp"
#include "quench/wigner.hpp"

namespace quench::figures {

namespace {

namespace d = quench::defaults;
using free::EvolutionMethod;
using well::WellState;

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

Table columns(std::vector<std::string> header, std::size_t rows) {
  Table t{std::move(header), {}};
  t.rows.assign(rows, std::vector<double>(t.header.size()));
  return t;
}

void set_column(Table& t, std::size_t col, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) t.rows[i][col] = values[i];
}

std::vector<double> density_values(const WellState& w, double t, const SpatialGrid& grid,
                                   const Tolerances& tol, Exec exec) {
  return free::density_profile(w, t, grid, EvolutionMethod::MomentumIntegral, tol, exec).values;
}

Table fig1(const FigureParams& p) {
  const double ratio = p.omega_ratio.value_or(d::fig1_omega_ratio);
  const auto params = harmonic::QuenchParams::with_shift(1.0, ratio, 1.0);
  const TimeGrid phase(0.0, d::fig1_phase_max, p.nx.value_or(d::fig1_points));
  const double dx0 = std::sqrt(harmonic::variance_x(params, 0.0));
  const double dp0 = std::sqrt(harmonic::variance_p(params, 0.0));
  auto table = columns({"omega_f_t", "mean_over_aF", "dx_over_dx0", "dp_over_dp0",
                        "two_dx_dp_over_hbar"},
                       phase.size());
  for (std::size_t i = 0; i < phase.size(); ++i) {
    const double t = phase[i] / params.omega_f;
    table.rows[i] = {phase[i], harmonic::mean_position(params, t) / params.shift(),
                     std::sqrt(harmonic::variance_x(params, t)) / dx0,
                     std::sqrt(harmonic::variance_p(params, t)) / dp0,
                     2.0 * harmonic::uncertainty_product(params, t)};
  }
  return table;
}

Table fig2(const FigureParams& p, const Tolerances& tol, Exec exec) {
  const auto w = WellState::from_k0a(p.k0a.value_or(d::k0a));
  const double xmax = p.xmax.value_or(d::xmax);
  const SpatialGrid grid(-xmax, xmax, p.nx.value_or(d::nx));
  std::vector<double> times(d::fig2_times.begin(), d::fig2_times.end());
  if (p.t) times = {*p.t};
  std::vector<std::string> header{"x_over_a"};
  for (double t : times) header.push_back("a_rho_t" + label(t));
  auto table = columns(header, grid.size());
  set_column(table, 0, grid.points());
  for (std::size_t c = 0; c < times.size(); ++c) {
    set_column(table, c + 1, density_values(w, times[c], grid, tol, exec));
  }
  return table;
}

Table fig3(const FigureParams& p, const Tolerances& tol, Exec exec) {
  const TimeGrid times(0.0, d::fig3_t_max, p.nx.value_or(d::fig3_points));
  std::vector<std::string> header{"t_over_t0"};
  for (double div : d::fig3_divisors) header.push_back("a_rho_pi" + label(div));
  auto table = columns(header, times.size());
  set_column(table, 0, times.points());
  for (std::size_t c = 0; c < d::fig3_divisors.size(); ++c) {
    const auto w = WellState::from_k0a(d::kPi / d::fig3_divisors[c]);
    std::vector<double> values(times.size());
    fill(values, [&](std::size_t i) { return std::norm(free::evolve_momentum(w, 0.0, times[i], tol)); },
         exec);
    set_column(table, c + 1, values);
  }
  return table;
}

Table fig4(const FigureParams& p, const Tolerances& tol, Exec exec) {
  const auto w = WellState::from_k0a(p.k0a.value_or(d::k0a));
  const auto ensemble = classical::ClassicalEnsemble::from_well(w, tol);
  const TimeGrid times(0.0, d::fig4_t_max, p.nx.value_or(d::fig4_points));
  std::vector<std::string> header{"t_over_t0"};
  for (double x : d::fig4_positions) {
    header.push_back("a_rho_qm_x" + label(x));
    header.push_back("a_rho_cl_x" + label(x));
  }
  auto table = columns(header, times.size());
  set_column(table, 0, times.points());
  for (std::size_t c = 0; c < d::fig4_positions.size(); ++c) {
    const double x = d::fig4_positions[c];
    std::vector<double> qm(times.size());
    std::vector<double> cl(times.size());
    fill(qm, [&](std::size_t i) { return std::norm(free::evolve_momentum(w, x, times[i], tol)); },
         exec);
    fill(
        cl,
        [&](std::size_t i) {
          return classical::classical_free_density(ensemble, x, times[i],
                                                   classical::FreeRoute::PositionFirst, tol);
        },
        exec);
    set_column(table, 2 * c + 1, qm);
    set_column(table, 2 * c + 2, cl);
  }
  return table;
}

Table fig5(const FigureParams& p, const Tolerances& tol, Exec exec) {
  const auto w = WellState::from_k0a(p.k0a.value_or(d::k0a));
  const double umax = p.xmax.value_or(d::xmax);
  const SpatialGrid u(-umax, umax, p.nx.value_or(d::nx));
  std::vector<std::string> header{"u"};
  for (double t : d::fig5_times) header.push_back("t_rho_t" + label(t));
  header.push_back("limit");
  auto table = columns(header, u.size());
  set_column(table, 0, u.points());
  for (std::size_t c = 0; c < d::fig5_times.size(); ++c) {
    set_column(table, c + 1,
               free::longtime_scaled_profile(w, d::fig5_times[c], u,
                                             EvolutionMethod::MomentumIntegral, tol, exec)
                   .values);
  }
  std::vector<double> limit(u.size());
  fill(limit, [&](std::size_t i) { return free::longtime_limit(w, u[i], tol); }, exec);
  set_column(table, d::fig5_times.size() + 1, limit);
  return table;
}

Table fig6(const FigureParams& p, const Tolerances& tol, Exec exec) {
  const auto w = WellState::infinite();
  const MomentumGrid k(-d::fig6_ak_max, d::fig6_ak_max, p.nx.value_or(d::fig6_points));
  std::vector<std::string> header{"ak"};
  for (double x : d::fig6_positions) header.push_back("hW_x" + label(x));
  for (double x : d::fig6_positions) header.push_back("hW_factorized_x" + label(x));
  auto table = columns(header, k.size());
  set_column(table, 0, k.points());
  const std::size_t n = d::fig6_positions.size();
  for (std::size_t c = 0; c < n; ++c) {
    const double x = d::fig6_positions[c];
    std::vector<double> exact(k.size());
    std::vector<double> approx(k.size());
    fill(exact, [&](std::size_t i) { return wigner::wigner_infinite_well(x, k[i], 1.0, tol); }, exec);
    fill(approx, [&](std::size_t i) { return wigner::factorized_approx(w, x, k[i], tol); }, exec);
    set_column(table, c + 1, exact);
    set_column(table, n + c + 1, approx);
  }
  return table;
}

Table fig7(const FigureParams& p, Exec exec) {
  const MomentumGrid k(-d::fig7_ak_max, d::fig7_ak_max, p.nx.value_or(d::fig7_points));
  std::vector<std::string> header{"ak"};
  for (double t : d::fig7_times) header.push_back("hW_t" + label(t));
  auto table = columns(header, k.size());
  set_column(table, 0, k.points());
  for (std::size_t c = 0; c < d::fig7_times.size(); ++c) {
    std::vector<double> values(k.size());
    fill(values, [&](std::size_t i) { return wigner::fig7_integrand(d::fig7_times[c], k[i]); }, exec);
    set_column(table, c + 1, values);
  }
  return table;
}

Table density(const FigureParams& p, const Tolerances& tol, Exec exec) {
  const auto w = WellState::from_k0a(p.k0a.value_or(d::k0a));
  const double xmax = p.xmax.value_or(d::xmax);
  const SpatialGrid grid(-xmax, xmax, p.nx.value_or(d::nx));
  auto table = columns({"x_over_a", "a_rho"}, grid.size());
  set_column(table, 0, grid.points());
  set_column(table, 1, density_values(w, p.t.value_or(d::density_t), grid, tol, exec));
  return table;
}

Table wigner_table(const FigureParams& p, const Tolerances& tol, Exec exec) {
  const auto w = WellState::from_k0a(p.k0a.value_or(d::k0a));
  const double xmax = p.xmax.value_or(d::wigner_xmax);
  const std::size_t n = p.nx.value_or(d::wigner_points);
  const SpatialGrid x(-xmax, xmax, n);
  const MomentumGrid k(-d::wigner_ak_max, d::wigner_ak_max, n);
  const auto source = w.branch() == well::WellBranch::InfiniteWell
                          ? wigner::WignerSource::ClosedFormInfiniteWell
                          : wigner::WignerSource::QuadratureFromPsi;
  const auto field = wigner::shear_evolve(wigner::wigner_field(w, source, x, k, tol, exec),
                                          p.t.value_or(d::wigner_t), exec);
  auto table = columns({"x_over_a", "ak", "hW"}, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table.rows[i * n + j] = {x[i], k[j], field.at(i, j)};
  }
  return table;
}

Table classical_table(const FigureParams& p, const Tolerances& tol, Exec exec) {
  const auto w = WellState::from_k0a(p.k0a.value_or(d::k0a));
  const double t = p.t.value_or(d::classical_t);
  const double xmax = p.xmax.value_or(d::xmax);
  const SpatialGrid grid(-xmax, xmax, p.nx.value_or(d::nx));
  const auto e = classical::ClassicalEnsemble::from_well(w, tol);
  auto table = columns({"x_over_a", "a_rho_cl", "a_rho_qm"}, grid.size());
  set_column(table, 0, grid.points());
  set_column(table, 1,
             classical::classical_free_profile(e, t, grid, classical::FreeRoute::PositionFirst, tol,
                                               exec)
                 .values);
  set_column(table, 2, density_values(w, t, grid, tol, exec));
  return table;
}

Table moments_table(const FigureParams& p, const Tolerances& tol) {
  std::vector<double> k0as;
  if (p.k0a) {
    k0as = {*p.k0a};
  } else {
    for (double div : d::fig3_divisors) k0as.push_back(d::kPi / div);
  }
  const double t = p.t.value_or(d::moments_t);
  Table table{{"k0a", "kappa_a", "c0", "x2_over_a2", "p2_a2_over_hbar2", "t_over_t0",
               "width_over_a2"},
              {}};
  for (double k0a : k0as) {
    const auto w = WellState::from_k0a(k0a);
    const auto m = well::moments(w, tol);
    table.rows.push_back({k0a, w.kappa(), w.c0(), m.x2, m.p2, t, m.x2 + t * t * m.p2});
  }
  return table;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Fig1: return "fig1";
    case Command::Fig2: return "fig2";
    case Command::Fig3: return "fig3";
    case Command::Fig4: return "fig4";
    case Command::Fig5: return "fig5";
    case Command::Fig6: return "fig6";
    case Command::Fig7: return "fig7";
    case Command::Density: return "density";
    case Command::Wigner: return "wigner";
    case Command::Classical: return "classical";
    case Command::Moments: return "moments";
  }
  return "unknown";
}

std::vector<std::string_view> accepted_keys(Command c) {
  switch (c) {
    case Command::Fig1: return {"omega-ratio", "nx"};
    case Command::Fig2: return {"k0a", "t", "xmax", "nx"};
    case Command::Fig3: return {"nx"};
    case Command::Fig4: return {"k0a", "nx"};
    case Command::Fig5: return {"k0a", "xmax", "nx"};
    case Command::Fig6: return {"nx"};
    case Command::Fig7: return {"nx"};
    case Command::Density: return {"k0a", "t", "xmax", "nx"};
    case Command::Wigner: return {"k0a", "t", "xmax", "nx"};
    case Command::Classical: return {"k0a", "t", "xmax", "nx"};
    case Command::Moments: return {"k0a", "t"};
  }
  return {};
}

std::string_view schema(Command c) {
  switch (c) {
    case Command::Fig1:
      return "omega_f_t: omega_f t in [0, 4 pi] (--nx samples)\n"
             "mean_over_aF: <x(t)> / a_F\n"
             "dx_over_dx0: Delta x(t) / Delta x(0)\n"
             "dp_over_dp0: Delta p(t) / Delta p(0)\n"
             "two_dx_dp_over_hbar: 2 Delta x Delta p / hbar";
    case Command::Fig2:
      return "x_over_a: x / a in [-xmax, xmax]\n"
             "a_rho_t<T>: a rho(x, t) at t/t0 = T in {0, 0.07, 0.14, 0.28} (or --t)";
    case Command::Fig3:
      return "t_over_t0: t / t0 in [0, 0.3]\n"
             "a_rho_pi<D>: a rho(0, t) for k0 a = pi / D, D in {2, 2.5, 3}";
    case Command::Fig4:
      return "t_over_t0: t / t0 in [0, 3]\n"
             "a_rho_qm_x<X>: quantum a rho(x, t) at x / a = X in {0, 1, 2}\n"
             "a_rho_cl_x<X>: classical approximation at the same x";
    case Command::Fig5:
      return "u: (x / a) / (t / t0) in [-xmax, xmax]\n"
             "t_rho_t<T>: (t / t0) a rho(u t, t) at t/t0 = T in {1, 2, 5, 10}\n"
             "limit: (hbar / a) |psi0~(hbar u / a)|^2, the long-time limit";
    case Command::Fig6:
      return "ak: a k in [-12, 12]\n"
             "hW_x<X>: hbar W(x, hbar k, 0) of the infinite well at x / a = X in {0, 0.5}\n"
             "hW_factorized_x<X>: hbar |psi0(x)|^2 |psi0~(hbar k)|^2 at the same x";
    case Command::Fig7:
      return "ak: a k in [-15, 15]\n"
             "hW_t<T>: hbar W(-hbar k t / m, hbar k, 0) at t/t0 = T in {0.14, 0.07}";
    case Command::Density:
      return "x_over_a: x / a in [-xmax, xmax]\n"
             "a_rho: a rho(x, t) (default t/t0 = 0.14)";
    case Command::Wigner:
      return "x_over_a: x / a in [-xmax, xmax] (default xmax 1.2)\n"
             "ak: a k in [-15, 15]\n"
             "hW: hbar W(x, hbar k, t) (default t = 0), nx x nx rows, x-major";
    case Command::Classical:
      return "x_over_a: x / a in [-xmax, xmax]\n"
             "a_rho_cl: classical approximation a rho_cl(x, t) (default t/t0 = 1)\n"
             "a_rho_qm: quantum a rho(x, t)";
    case Command::Moments:
      return "k0a: k0 a (default pi/2, pi/2.5, pi/3)\n"
             "kappa_a: kappa a\n"
             "c0: normalization constant in 1/sqrt(a)\n"
             "x2_over_a2: <x^2> / a^2\n"
             "p2_a2_over_hbar2: <p^2> a^2 / hbar^2\n"
             "t_over_t0: t / t0 (default 1)\n"
             "width_over_a2: (<x^2> + t^2 <p^2> / m^2) / a^2";
  }
  return "";
}

void validate(const FigureParams& p) {
  auto bad = [](const char* key, const std::string& why) {
    throw Error(ErrorCode::InvalidParams, std::string(key) + ": " + why);
  };
  if (p.k0a && !(*p.k0a > 0.0 && *p.k0a <= d::kPi / 2.0)) bad("k0a", "must lie in (0, pi/2]");
  if (p.omega_ratio && !(*p.omega_ratio > 0.0 && std::isfinite(*p.omega_ratio))) {
    bad("omega-ratio", "must be positive and finite");
  }
  if (p.t && !(*p.t >= 0.0 && std::isfinite(*p.t))) bad("t", "must be non-negative and finite");
  if (p.xmax && !(*p.xmax > 0.0 && std::isfinite(*p.xmax))) bad("xmax", "must be positive and finite");
  if (p.nx && (*p.nx < 2 || *p.nx > 1000000)) bad("nx", "must lie in [2, 1000000]");
}

Table make_table(Command c, const FigureParams& p, const Tolerances& tol, Exec exec) {
  validate(p);
  switch (c) {
    case Command::Fig1: return fig1(p);
    case Command::Fig2: return fig2(p, tol, exec);
    case Command::Fig3: return fig3(p, tol, exec);
    case Command::Fig4: return fig4(p, tol, exec);
    case Command::Fig5: return fig5(p, tol, exec);
    case Command::Fig6: return fig6(p, tol, exec);
    case Command::Fig7: return fig7(p, exec);
    case Command::Density: return density(p, tol, exec);
    case Command::Wigner: return wigner_table(p, tol, exec);
    case Command::Classical: return classical_table(p, tol, exec);
    case Command::Moments: return moments_table(p, tol);
  }
  throw Error(ErrorCode::InvalidParams, "unknown command");
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    out << (c ? "," : "") << table.header[c];
  }
  out << '\n';
  char buf[32];
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      // Avoid "-0" so that mirrored grids print identically.
      const double v = row[c] == 0.0 ? 0.0 : row[c];
      std::snprintf(buf, sizeof buf, "%.12g", v);
      out << (c ? "," : "") << buf;
    }
    out << '\n';
  }
}

double parse_real(std::string_view text, std::string_view key) {
  auto fail = [&]() -> double {
    throw Error(ErrorCode::InvalidParams,
                std::string(key) + ": cannot parse '" + std::string(text) + "' as a number");
  };
  std::size_t pos = 0;
  auto term = [&]() -> double {
    if (text.substr(pos, 2) == "pi") {
      pos += 2;
      return d::kPi;
    }
    double v = 0.0;
    const auto res = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr == text.data() + pos) return fail();
    pos = static_cast<std::size_t>(res.ptr - text.data());
    return v;
  };
  if (text.empty()) return fail();
  double value = term();
  while (pos < text.size()) {
    const char op = text[pos++];
    if (op != '*' && op != '/') return fail();
    const double rhs = term();
    value = op == '*' ? value * rhs : value / rhs;
  }
  if (!std::isfinite(value)) return fail();
  return value;
}

}  // namespace quench::figures
