#ifndef QUENCH_QUADRATURE_HPP
#define QUENCH_QUADRATURE_HPP

// Globally adaptive 21-point Gauss-Kronrod integration over a set of initial
// panels. Works for real and complex integrands. Error heuristics follow
// QUADPACK's qk21/qag.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "quench/error.hpp"

namespace quench::quad {

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  std::size_t max_panels = 400000;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

inline constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// 10-point Gauss weights for the odd-indexed Kronrod nodes.
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class T>
struct Panel {
  double lo;
  double hi;
  T value;
  double error;
  double roundoff;

  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class T, class F>
Panel<T> gauss_kronrod_21(F& f, double lo, double hi) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  std::array<T, 5> fv1_odd{}, fv2_odd{};
  std::array<T, 5> fv1_even{}, fv2_even{};

  const T fc = f(center);
  T gauss{};
  T kronrod = fc * kKronrodWeights[10];
  double resabs = std::abs(fc) * kKronrodWeights[10];

  for (std::size_t j = 0; j < 5; ++j) {
    const std::size_t jtw = 2 * j + 1;
    const double dx = half * kNodes[jtw];
    fv1_odd[j] = f(center - dx);
    fv2_odd[j] = f(center + dx);
    const T sum = fv1_odd[j] + fv2_odd[j];
    gauss += kGaussWeights[j] * sum;
    kronrod += kKronrodWeights[jtw] * sum;
    resabs += kKronrodWeights[jtw] * (std::abs(fv1_odd[j]) + std::abs(fv2_odd[j]));
  }
  for (std::size_t j = 0; j < 5; ++j) {
    const std::size_t jtwm1 = 2 * j;
    const double dx = half * kNodes[jtwm1];
    fv1_even[j] = f(center - dx);
    fv2_even[j] = f(center + dx);
    kronrod += kKronrodWeights[jtwm1] * (fv1_even[j] + fv2_even[j]);
    resabs += kKronrodWeights[jtwm1] * (std::abs(fv1_even[j]) + std::abs(fv2_even[j]));
  }

  const T mean = kronrod * 0.5;
  double resasc = kKronrodWeights[10] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 5; ++j) {
    resasc += kKronrodWeights[2 * j + 1] *
              (std::abs(fv1_odd[j] - mean) + std::abs(fv2_odd[j] - mean));
    resasc += kKronrodWeights[2 * j] *
              (std::abs(fv1_even[j] - mean) + std::abs(fv2_even[j] - mean));
  }

  const double width = std::abs(half);
  resabs *= width;
  resasc *= width;
  double error = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && error != 0.0) {
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  }
  const double roundoff = 50.0 * eps * resabs;
  error = std::max(error, roundoff);
  return Panel<T>{lo, hi, kronrod * half, error, roundoff};
}

}  // namespace detail

/// Integrates `f` over [breakpoints.front(), breakpoints.back()], starting from
/// the panels delimited by consecutive breakpoints (which must be ascending).
/// Panels with the largest error estimate are bisected until the total error
/// meets max(abs_tol, rel_tol * |value|). Throws QuadratureNonconvergence when
/// `max_panels` is exhausted.
template <class F>
auto integrate(F&& f, std::span<const double> breakpoints, const Options& options = {})
    -> Result<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  using Panel = detail::Panel<T>;

  Result<T> result;
  if (breakpoints.size() < 2) return result;

  std::priority_queue<Panel> queue;
  T total{};
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double lo = breakpoints[i];
    const double hi = breakpoints[i + 1];
    if (!(hi > lo)) continue;
    Panel p = detail::gauss_kronrod_21<T>(f, lo, hi);
    result.evaluations += 21;
    total += p.value;
    total_error += p.error;
    queue.push(p);
  }

  while (!queue.empty() &&
         total_error > std::max(options.abs_tol, options.rel_tol * std::abs(total))) {
    if (queue.size() >= options.max_panels) {
      throw Error(ErrorCode::QuadratureNonconvergence,
                  "panel budget exhausted with error estimate " + std::to_string(total_error));
    }
    Panel worst = queue.top();
    // Nothing left to gain once the worst panel is at its roundoff floor.
    if (worst.error <= worst.roundoff * (1.0 + 1e-12)) break;
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;
    queue.pop();
    Panel left = detail::gauss_kronrod_21<T>(f, worst.lo, mid);
    Panel right = detail::gauss_kronrod_21<T>(f, mid, worst.hi);
    result.evaluations += 42;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum in panel order so the value does not depend on refinement history drift.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  T sum{};
  double error = 0.0;
  for (const Panel& p : panels) {
    sum += p.value;
    error += p.error;
  }
  result.value = sum;
  result.error = error;
  return result;
}

template <class F>
auto integrate(F&& f, double lo, double hi, const Options& options = {}) {
  const std::array<double, 2> bounds{lo, hi};
  return integrate(std::forward<F>(f), std::span<const double>(bounds), options);
}

/// Splits [lo, hi] into panels no wider than `max_width` and no wider than one
/// local period 2*pi/rate(x) of an oscillatory integrand. `fixed` points (kinks,
/// support edges) inside the interval are always kept as breakpoints.
template <class Rate>
std::vector<double> oscillation_breakpoints(double lo, double hi, Rate&& rate, double max_width,
                                            std::span<const double> fixed = {}) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> stops;
  for (double p : fixed) {
    if (p > lo && p < hi) stops.push_back(p);
  }
  stops.push_back(hi);
  std::sort(stops.begin(), stops.end());

  std::vector<double> points{lo};
  double x = lo;
  for (double stop : stops) {
    while (x < stop) {
      double h = max_width;
      const double r0 = rate(x);
      if (r0 > 0.0) h = std::min(h, two_pi / r0);
      const double r1 = rate(std::min(x + h, stop));
      if (r1 > 0.0) h = std::min(h, two_pi / r1);
      x = (x + h >= stop - 1e-12 * std::max(1.0, std::abs(stop))) ? stop : x + h;
      points.push_back(x);
    }
  }
  return points;
}

}  // namespace quench::quad

#endif  // QUENCH_QUADRATURE_HPP
