#include "quench/square_well.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "quench/quadrature.hpp"

namespace quench::well {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

// Wavenumber beyond which the momentum integrand is replaced by its
// asymptotic form in the <p^2> quadrature.
double asymptotic_start(const WellState& w) {
  const double base = 2e4 / w.a();
  if (w.branch() == WellBranch::FiniteWell) return std::max(base, 100.0 * w.kappa());
  return base;
}

// (y - atan(y)) / y^3, stable for small y.
double atan_remainder(double y) {
  if (y < 0.05) {
    const double y2 = y * y;
    return 1.0 / 3.0 - y2 / 5.0 + y2 * y2 / 7.0;
  }
  return (y - std::atan(y)) / (y * y * y);
}

// Integral of k^2 psi0~(k)^2 over [q, infinity) from the large-k form.
double p2_asymptotic_tail(const WellState& w, double q) {
  switch (w.branch()) {
    case WellBranch::InfiniteWell: {
      const double k0 = w.k0();
      const double a = w.a();
      const double pref = 2.0 * k0 * k0 / (kPi * a);
      return pref * (0.5 / q + k0 * k0 / (3.0 * q * q * q) - std::sin(2.0 * q * a) / (4.0 * a * q * q));
    }
    case WellBranch::DeltaWell: {
      const double kappa = w.kappa();
      const double k3 = kappa * kappa * kappa;
      return 2.0 * k3 / kPi * (1.0 / q - 2.0 * kappa * kappa / (3.0 * q * q * q));
    }
    case WellBranch::FiniteWell: {
      const double kappa = w.kappa();
      const double k0 = w.k0();
      const double pref = 2.0 * w.c0() * kInvSqrt2Pi;
      const double s = kappa * kappa + k0 * k0;
      // pref^2 s^2 / 2 * integral dk / (k^2 (k^2 + kappa^2)) from q to infinity
      const double y = kappa / q;
      const double integral = y * y * y * atan_remainder(y) / (kappa * kappa * kappa);
      return 0.5 * pref * pref * s * s * integral;
    }
  }
  return 0.0;
}

double p2_integrand(const WellState& w, double k, const Tolerances& tol) {
  const double amp = psi0_momentum(w, k, tol);
  return k * k * amp * amp;
}

}  // namespace

WellState WellState::finite(double k0a, double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidParams, "well half-width a must be positive");
  if (!(k0a > 0.0 && k0a < kPi / 2.0)) {
    throw Error(ErrorCode::InvalidParams, "k0a must lie in (0, pi/2), got " + std::to_string(k0a));
  }
  const double k0 = k0a / a;
  const double kappa = k0 * std::tan(k0a);
  const double c0 = 1.0 / std::sqrt(1.0 / kappa + a * (1.0 + kappa * kappa / (k0 * k0)) +
                                    kappa / (k0 * k0));
  return WellState(WellBranch::FiniteWell, a, k0, kappa, c0);
}

WellState WellState::delta(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorCode::InvalidParams, "kappa must be positive");
  }
  return WellState(WellBranch::DeltaWell, 1.0, 0.0, kappa, std::sqrt(kappa));
}

WellState WellState::infinite(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidParams, "well half-width a must be positive");
  return WellState(WellBranch::InfiniteWell, a, kPi / (2.0 * a),
                   std::numeric_limits<double>::infinity(), 1.0 / std::sqrt(a));
}

WellState WellState::from_k0a(double k0a, double a) {
  if (k0a == kPi / 2.0) return infinite(a);
  return finite(k0a, a);
}

std::vector<double> WellState::kinks() const {
  if (branch_ == WellBranch::DeltaWell) return {0.0};
  return {-a_, a_};
}

double WellState::support_half_width(double threshold) const {
  switch (branch_) {
    case WellBranch::InfiniteWell: return a_;
    case WellBranch::DeltaWell: return std::max(0.0, std::log(c0_ / threshold) / kappa_);
    case WellBranch::FiniteWell: return a_ + std::max(0.0, std::log(c0_ / threshold) / kappa_);
  }
  return a_;
}

double WellState::oscillation_length() const {
  return branch_ == WellBranch::DeltaWell ? 0.0 : a_;
}

double psi0(const WellState& w, double x) {
  const double ax = std::abs(x);
  switch (w.branch()) {
    case WellBranch::InfiniteWell:
      return ax < w.a() ? std::cos(w.k0() * x) * w.c0() : 0.0;
    case WellBranch::DeltaWell:
      return w.c0() * std::exp(-w.kappa() * ax);
    case WellBranch::FiniteWell:
      if (ax <= w.a()) return w.c0() * std::cos(w.k0() * x) / std::cos(w.k0a());
      return w.c0() * std::exp(-w.kappa() * (ax - w.a()));
  }
  return 0.0;
}

double psi0_derivative(const WellState& w, double x) {
  const double ax = std::abs(x);
  const double sign = x < 0.0 ? -1.0 : 1.0;
  switch (w.branch()) {
    case WellBranch::InfiniteWell:
      return ax < w.a() ? -w.k0() * std::sin(w.k0() * x) * w.c0() : 0.0;
    case WellBranch::DeltaWell:
      return -sign * w.kappa() * psi0(w, x);
    case WellBranch::FiniteWell:
      if (ax <= w.a()) return -w.c0() * w.k0() * std::sin(w.k0() * x) / std::cos(w.k0a());
      return -sign * w.kappa() * psi0(w, x);
  }
  return 0.0;
}

double psi0_momentum(const WellState& w, double k, const Tolerances& tol) {
  k = std::abs(k);
  const double a = w.a();
  switch (w.branch()) {
    case WellBranch::DeltaWell: {
      const double kappa = w.kappa();
      return 2.0 * kappa * std::sqrt(kappa) * kInvSqrt2Pi / (k * k + kappa * kappa);
    }
    case WellBranch::InfiniteWell: {
      const double k0 = w.k0();
      const double delta = k - k0;
      // cos(ka) / (k0^2 - k^2); the numerator -a delta + O(delta^3) near k0.
      const double ratio = std::abs(delta) < tol.singularity_window * k0
                               ? a / (2.0 * k0 + delta)
                               : std::cos(k * a) / (k0 * k0 - k * k);
      return 2.0 * k0 * kInvSqrt2Pi / std::sqrt(a) * ratio;
    }
    case WellBranch::FiniteWell: {
      const double k0 = w.k0();
      const double kappa = w.kappa();
      const double delta = k - k0;
      const double numerator = kappa * std::cos(k * a) - k * std::sin(k * a);
      double singular;  // numerator / (k^2 - k0^2)
      if (std::abs(delta) < tol.singularity_window * k0) {
        // numerator(k0) = 0 because kappa = k0 tan(k0 a).
        const double s = std::sin(k0 * a);
        const double c = std::cos(k0 * a);
        const double d1 = -kappa * a * s - s - k0 * a * c;
        const double d2 = -kappa * a * a * c - 2.0 * a * c + k0 * a * a * s;
        singular = (d1 + 0.5 * d2 * delta) / (2.0 * k0 + delta);
      } else {
        singular = numerator / (k * k - k0 * k0);
      }
      return 2.0 * w.c0() * kInvSqrt2Pi * (numerator / (k * k + kappa * kappa) - singular);
    }
  }
  return 0.0;
}

complex psi0_momentum(const WellState& w, complex k) {
  const double a = w.a();
  switch (w.branch()) {
    case WellBranch::DeltaWell: {
      const double kappa = w.kappa();
      return 2.0 * kappa * std::sqrt(kappa) * kInvSqrt2Pi / (k * k + kappa * kappa);
    }
    case WellBranch::InfiniteWell: {
      const double k0 = w.k0();
      return 2.0 * k0 * kInvSqrt2Pi / std::sqrt(a) * std::cos(k * a) / (k0 * k0 - k * k);
    }
    case WellBranch::FiniteWell: {
      const double k0 = w.k0();
      const double kappa = w.kappa();
      const complex numerator = kappa * std::cos(k * a) - k * std::sin(k * a);
      return 2.0 * w.c0() * kInvSqrt2Pi *
             numerator * (1.0 / (k * k + kappa * kappa) - 1.0 / (k * k - k0 * k0));
    }
  }
  return 0.0;
}

double momentum_p2_tail(const WellState& w, double k_min, const Tolerances& tol) {
  k_min = std::abs(k_min);
  const double q = std::max(asymptotic_start(w), k_min);
  double body = 0.0;
  if (q > k_min) {
    const double rate = 2.0 * w.oscillation_length();
    const auto points = quad::oscillation_breakpoints(
        k_min, q, [rate](double) { return rate; }, 2.0);
    body = quad::integrate([&](double k) { return p2_integrand(w, k, tol); }, points,
                           {1e-3 * tol.quad_abs, 1e-3 * tol.quad_rel})
               .value;
  }
  return 2.0 * (body + p2_asymptotic_tail(w, q));
}

Moments moments(const WellState& w, const Tolerances& tol) {
  const double edge = w.support_half_width(1e-18);
  std::vector<double> points{0.0};
  for (double kink : w.kinks()) {
    if (kink > 0.0 && kink < edge) points.push_back(kink);
  }
  points.push_back(edge);
  const auto x2 = quad::integrate(
      [&](double x) {
        const double v = psi0(w, x);
        return x * x * v * v;
      },
      points, {1e-3 * tol.quad_abs, 1e-3 * tol.quad_rel});
  return Moments{2.0 * x2.value, momentum_p2_tail(w, 0.0, tol)};
}

}  // namespace quench::well
