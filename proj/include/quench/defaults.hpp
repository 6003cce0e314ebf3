#ifndef QUENCH_DEFAULTS_HPP
#define QUENCH_DEFAULTS_HPP

// Default parameters of every figure table. Lengths in units of a, times in
// t0 = m a^2 / hbar, wavenumbers in 1/a; fig1 in oscillator units.

#include <array>
#include <cstddef>
#include <numbers>

namespace quench::defaults {

inline constexpr double kPi = std::numbers::pi;

// fig1: harmonic frequency quench, omega_f t in [0, 4 pi].
inline constexpr double fig1_omega_ratio = 0.5;
inline constexpr double fig1_phase_max = 4.0 * kPi;
inline constexpr std::size_t fig1_points = 401;

// figs 2-5 share the spatial grid x in [-6a, 6a].
inline constexpr double xmax = 6.0;
inline constexpr std::size_t nx = 1201;

// The infinitely deep well, k0 a = pi/2.
inline constexpr double k0a = kPi / 2.0;

inline constexpr std::array<double, 4> fig2_times{0.0, 0.07, 0.14, 0.28};

// fig3: a rho(0, t) for three well depths, t in [0, 0.3].
inline constexpr std::array<double, 3> fig3_divisors{2.0, 2.5, 3.0};
inline constexpr double fig3_t_max = 0.3;
inline constexpr std::size_t fig3_points = 301;

// fig4: quantum vs classical a rho(x, t) at x/a in {0, 1, 2}, t in [0, 3].
inline constexpr std::array<double, 3> fig4_positions{0.0, 1.0, 2.0};
inline constexpr double fig4_t_max = 3.0;
inline constexpr std::size_t fig4_points = 301;

// fig5: t rho(u t, t) at four times, u = (x/a)/(t/t0) on the shared grid.
inline constexpr std::array<double, 4> fig5_times{1.0, 2.0, 5.0, 10.0};

// fig6: W(x, hbar k, 0) of the infinite well at x = 0 and x = a/2.
inline constexpr std::array<double, 2> fig6_positions{0.0, 0.5};
inline constexpr double fig6_ak_max = 12.0;
inline constexpr std::size_t fig6_points = 1201;

// fig7: W(-hbar k t/m, hbar k, 0) at t = 0.14 and 0.07.
inline constexpr std::array<double, 2> fig7_times{0.14, 0.07};
inline constexpr double fig7_ak_max = 15.0;
inline constexpr std::size_t fig7_points = 1201;

// Single-time commands.
inline constexpr double density_t = 0.14;
inline constexpr double classical_t = 1.0;
inline constexpr double moments_t = 1.0;
inline constexpr double wigner_t = 0.0;
inline constexpr double wigner_xmax = 1.2;
inline constexpr double wigner_ak_max = 15.0;
inline constexpr std::size_t wigner_points = 121;

}  // namespace quench::defaults

#endif  // QUENCH_DEFAULTS_HPP
