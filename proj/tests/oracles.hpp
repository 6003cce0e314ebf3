#ifndef QUENCH_TESTS_ORACLES_HPP
#define QUENCH_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests: composite
// Simpson sums over fixed fine grids and closed forms worked out by hand. None
// of them call the library's adaptive quadrature.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using complex = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

template <class F>
auto simpson(F&& f, double a, double b, int n) -> decltype(f(a)) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  auto sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * (h / 3.0);
}

// Simpson over consecutive pieces [p_i, p_{i+1}], n intervals each.
template <class F>
auto simpson_pieces(F&& f, const std::vector<double>& points, int n) -> decltype(f(points[0])) {
  decltype(f(points[0])) sum{};
  for (std::size_t i = 0; i + 1 < points.size(); ++i) sum += simpson(f, points[i], points[i + 1], n);
  return sum;
}

// Normalized eigenfunctions of the oscillator with frequency omega centred at
// c (hbar = m = 1), phi_0..phi_{n-1} at x, by the stable three-term recurrence.
inline std::vector<double> hermite_functions(int n, double omega, double c, double x) {
  const double s = std::sqrt(omega);
  const double xi = s * (x - c);
  std::vector<double> phi(static_cast<std::size_t>(n));
  phi[0] = std::pow(omega / pi, 0.25) * std::exp(-0.5 * xi * xi);
  if (n > 1) phi[1] = std::sqrt(2.0) * xi * phi[0];
  for (int k = 2; k < n; ++k) {
    phi[static_cast<std::size_t>(k)] =
        std::sqrt(2.0 / k) * xi * phi[static_cast<std::size_t>(k - 1)] -
        std::sqrt((k - 1.0) / k) * phi[static_cast<std::size_t>(k - 2)];
  }
  return phi;
}

// Density at (x, t) of the initial oscillator level `level` (omega_i, centred
// at 0) evolved in the final oscillator (omega_f, centred at shift) by
// expansion in `states` final eigenstates.
class EigenbasisPropagation {
 public:
  EigenbasisPropagation(int level, double omega_i, double omega_f, double shift, int states = 64)
      : omega_f_(omega_f), shift_(shift), states_(states), coeff_(static_cast<std::size_t>(states)) {
    const double lo = std::min(0.0, shift) - 14.0 / std::sqrt(std::min(omega_i, omega_f));
    const double hi = std::max(0.0, shift) + 14.0 / std::sqrt(std::min(omega_i, omega_f));
    const int n = 8000;
    const double h = (hi - lo) / n;
    for (int i = 0; i <= n; ++i) {
      const double x = lo + i * h;
      const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      const double init = hermite_functions(level + 1, omega_i, 0.0, x)[static_cast<std::size_t>(level)];
      const auto fin = hermite_functions(states, omega_f, shift, x);
      for (int m = 0; m < states; ++m) coeff_[static_cast<std::size_t>(m)] += w * h / 3.0 * fin[static_cast<std::size_t>(m)] * init;
    }
  }

  double density(double x, double t) const {
    const auto fin = hermite_functions(states_, omega_f_, shift_, x);
    complex psi = 0.0;
    for (int m = 0; m < states_; ++m) {
      psi += coeff_[static_cast<std::size_t>(m)] * std::exp(complex(0.0, -(m + 0.5) * omega_f_ * t)) *
             fin[static_cast<std::size_t>(m)];
    }
    return std::norm(psi);
  }

  double captured_norm() const {
    double s = 0.0;
    for (double c : coeff_) s += c * c;
    return s;
  }

 private:
  double omega_f_;
  double shift_;
  int states_;
  std::vector<double> coeff_;
};

// Square-well ground state written out independently from its definition.
struct Well {
  double a;
  double k0;
  double kappa;
  double c0;
  bool box;

  static Well finite(double k0a) {
    const double k0 = k0a;
    const double kappa = k0 * std::tan(k0a);
    // Normalization by direct integration: inside a + sin(2 k0 a)/(2 k0),
    // outside cos^2(k0 a)/kappa on each side.
    const double inside = 1.0 + std::sin(2.0 * k0a) / (2.0 * k0);
    const double outside = std::cos(k0a) * std::cos(k0a) / kappa;
    return {1.0, k0, kappa, 1.0 / std::sqrt(inside + outside), false};
  }
  static Well infinite() { return {1.0, pi / 2.0, 0.0, 1.0, true}; }

  double psi(double x) const {
    const double ax = std::abs(x);
    if (ax <= a) return c0 * std::cos(k0 * x);
    if (box) return 0.0;
    return c0 * std::cos(k0 * a) * std::exp(-kappa * (ax - a));
  }
  double dpsi(double x) const {
    const double ax = std::abs(x);
    if (ax <= a) return -c0 * k0 * std::sin(k0 * x);
    if (box) return 0.0;
    return -std::copysign(1.0, x) * kappa * c0 * std::cos(k0 * a) * std::exp(-kappa * (ax - a));
  }
  double half_width() const { return box ? a : a + 40.0 / kappa; }

  // (2 pi)^(-1/2) integral psi(x) cos(k x) dx by Simpson on fine pieces.
  double momentum(double k) const {
    const double L = half_width();
    auto f = [&](double x) { return psi(x) * std::cos(k * x); };
    std::vector<double> pts{0.0, a};
    if (!box) {
      for (double x = a + 1.0; x < L; x += 1.0) pts.push_back(x);
      pts.push_back(L);
    }
    return 2.0 * simpson_pieces(f, pts, 4000) / std::sqrt(2.0 * pi);
  }
};

// Delta-well ground state sqrt(kappa) exp(-kappa |x|).
inline double delta_psi(double kappa, double x) { return std::sqrt(kappa) * std::exp(-kappa * std::abs(x)); }

// psi(0, t) for the infinitely deep well (a = 1) from the free propagator by
// Simpson over x' in [0, 1] (the integrand is even).
inline double box_density_origin(double t) {
  const auto f = [&](double x) { return std::exp(complex(0.0, x * x / (2.0 * t))) * std::cos(pi * x / 2.0); };
  const complex integral = 2.0 * simpson(f, 0.0, 1.0, 200000);
  return std::norm(integral) / (2.0 * pi * t);
}

// W(x, p) of a real wave function by Simpson over y in [-2(L-|x|), 2(L-|x|)].
inline double wigner(const std::function<double(double)>& psi, double L, double x, double p, int n = 20000) {
  const double r = 2.0 * (L - std::abs(x));
  if (r <= 0.0) return 0.0;
  auto f = [&](double y) { return std::cos(p * y) * psi(x - 0.5 * y) * psi(x + 0.5 * y); };
  // Kinks of psi(x +- y/2) at |x +- y/2| = 0, 1 fall on these points.
  std::vector<double> pts{-r};
  for (double b : {-1.0, 0.0, 1.0}) {
    for (double y : {2.0 * (b - x), 2.0 * (x - b)}) {
      if (y > -r && y < r) pts.push_back(y);
    }
  }
  pts.push_back(r);
  std::sort(pts.begin(), pts.end());
  return simpson_pieces(f, pts, n) / (2.0 * pi);
}

// Classical free density for rho0(x0) rho0~(p0) by Simpson over x0.
inline double classical_density(const std::function<double(double)>& rx, const std::function<double(double)>& rp,
                                 const std::vector<double>& x_pieces, double x, double t, int n = 4000) {
  auto f = [&](double x0) { return rx(x0) * rp((x - x0) / t); };
  return simpson_pieces(f, x_pieces, n) / t;
}

}  // namespace oracle

#endif  // QUENCH_TESTS_ORACLES_HPP
