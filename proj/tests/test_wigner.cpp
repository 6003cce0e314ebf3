#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "quench/free_evolution.hpp"
#include "quench/wigner.hpp"

using namespace quench;
using wigner::WaveFunction;
using wigner::WignerSource;
using well::WellState;

namespace {

double gaussian(double omega, double x) { return std::pow(omega / kPi, 0.25) * std::exp(-0.5 * omega * x * x); }

}  // namespace

TEST_CASE("Gaussian Wigner function factorizes") {
  const auto wf = WaveFunction::oscillator_ground(1.0);
  const double x = 0.3;
  const double p = -0.7;
  const double expected = std::pow(gaussian(1.0, x), 2) * std::pow(gaussian(1.0, p), 2);
  CHECK(wigner::wigner_from_psi(wf, x, p) == doctest::Approx(expected).epsilon(1e-8));
  CHECK(std::abs(wigner::wigner_integral(wf, x, p).imag()) < 1e-10);
}

TEST_CASE("quadrature against the Simpson oracle") {
  const auto w = WellState::finite(kPi / 2.5);
  const auto ref = oracle::Well::finite(kPi / 2.5);
  const auto wf = WaveFunction::from_well(w);
  for (double x : {0.0, 0.45, 1.2}) {
    for (double p : {0.0, 1.3, -2.6, 5.0}) {
      const double value = wigner::wigner_from_psi(wf, x, p);
      CHECK(value == doctest::Approx(oracle::wigner([&](double y) { return ref.psi(y); }, ref.half_width(), x, p)).epsilon(1e-8));
      CHECK(value == doctest::Approx(wigner::wigner_from_psi(wf, x, -p)).epsilon(1e-12));
      CHECK(std::abs(wigner::wigner_integral(wf, x, p).imag()) < 1e-10);
    }
  }
}

TEST_CASE("closed form for the infinite well") {
  const auto box = WellState::infinite();
  const auto wf = WaveFunction::from_well(box);
  const auto ref = oracle::Well::infinite();
  CHECK(wigner::wigner_infinite_well(0.0, 0.0) == doctest::Approx(wigner::wigner_from_psi(wf, 0.0, 0.0)).epsilon(1e-8));
  for (double x : {-0.8, 0.0, 0.5}) {
    for (double k : {0.0, 0.7, kPi / 2.0, 4.0, -9.0}) {
      const double closed = wigner::wigner_infinite_well(x, k);
      CHECK(closed == doctest::Approx(oracle::wigner([&](double y) { return ref.psi(y); }, 1.0, x, k)).epsilon(1e-8));
    }
  }
  CHECK(wigner::wigner_infinite_well(1.0, 2.0) == 0.0);
  CHECK(wigner::wigner_infinite_well(-1.0, 0.3) == 0.0);
  CHECK(wigner::wigner_infinite_well(1.3, 0.3) == 0.0);
  // 2 a k = pi is a removable singularity of two of the terms.
  const double k = kPi / 2.0;
  CHECK(wigner::wigner_infinite_well(0.3, k) == doctest::Approx(wigner::wigner_infinite_well(0.3, k * (1.0 + 1e-7))).epsilon(1e-6));
  CHECK(wigner::wigner_infinite_well(0.3, 0.0) == doctest::Approx(wigner::wigner_infinite_well(0.3, 1e-7)).epsilon(1e-6));
}

TEST_CASE("negativity") {
  double lowest = 0.0;
  for (double x : {0.0, 0.5}) {
    for (double k = 0.0; k <= 8.0; k += 0.01) lowest = std::min(lowest, wigner::wigner_infinite_well(x, k));
  }
  CHECK(lowest < -1e-3);
}

TEST_CASE("marginals of the closed form") {
  CHECK(wigner::position_marginal(0.5) == doctest::Approx(std::pow(well::psi0(WellState::infinite(), 0.5), 2)).epsilon(1e-4));
  for (double k : {0.0, 1.0, kPi / 2.0, 3.7}) {
    CHECK(wigner::momentum_marginal(k) == doctest::Approx(std::pow(oracle::Well::infinite().momentum(k), 2)).epsilon(1e-8));
  }
}

TEST_CASE("sampled field marginals and normalization") {
  const auto box = WellState::infinite();
  const SpatialGrid x(-1.0, 1.0, 201);
  const MomentumGrid k(-200.0, 200.0, 40001);
  const auto field = wigner::wigner_field(box, WignerSource::ClosedFormInfiniteWell, x, k);
  const auto mx = wigner::marginal_x(field);
  for (std::size_t i = 0; i < x.size(); i += 25) {
    CHECK(mx.values[i] == doctest::Approx(std::pow(well::psi0(box, x[i]), 2)).epsilon(1e-3));
  }
  CHECK(integrate_density(mx) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(wigner::min_value(field) < -1e-3);
}

TEST_CASE("shear") {
  const auto box = WellState::infinite();
  const SpatialGrid x(-2.0, 2.0, 41);
  const MomentumGrid k(-60.0, 60.0, 24001);
  const auto field = wigner::wigner_field(box, WignerSource::ClosedFormInfiniteWell, x, k);
  const auto same = wigner::shear_evolve(field, 0.0);
  CHECK(same.values == field.values);

  const auto later = wigner::shear_evolve(field, 0.14);
  CHECK(later.t == doctest::Approx(0.14));
  const auto mx = wigner::marginal_x(later);
  CHECK(mx.values[20] == doctest::Approx(std::norm(free::evolve_propagator(box, 0.0, 0.14))).epsilon(1e-3));

  const auto p0 = wigner::marginal_p(field);
  const auto p1 = wigner::marginal_p(wigner::shear_evolve(field, 0.05));
  for (std::size_t j = 12000; j < 12400; j += 50) CHECK(p1.values[j] == doctest::Approx(p0.values[j]).epsilon(1e-3));
}

TEST_CASE("interpolated shear without an exact evaluator") {
  const auto box = WellState::infinite();
  const SpatialGrid x(-1.5, 1.5, 601);
  const MomentumGrid k(-8.0, 8.0, 161);
  auto field = wigner::wigner_field(box, WignerSource::ClosedFormInfiniteWell, x, k);
  field.initial = nullptr;
  const auto moved = wigner::shear_evolve(field, 0.02);
  for (double xi : {-0.4, 0.0, 0.3}) {
    for (std::size_t j = 40; j < 120; j += 20) {
      const double p = k[j];
      CHECK(moved.interpolate(xi, p) == doctest::Approx(wigner::wigner_infinite_well(xi - p * 0.02, p)).epsilon(2e-3));
    }
  }
}

TEST_CASE("density from the Wigner function") {
  for (double t : {0.07, 0.14}) {
    const double ref = oracle::box_density_origin(t);
    CHECK(wigner::density_from_wigner(0.0, t) == doctest::Approx(ref).epsilon(1e-6));
    const double integral = oracle::simpson([&](double k) { return wigner::fig7_integrand(t, k); }, -400.0, 400.0, 400000);
    CHECK(integral == doctest::Approx(ref).epsilon(1e-3));
  }
  const auto area = [](double t) {
    return oracle::simpson([&](double k) { return wigner::fig7_integrand(t, k); }, -400.0, 400.0, 400000);
  };
  CHECK(area(0.14) > area(0.07));
  for (double k : {0.3, 2.0, 11.0}) CHECK(wigner::fig7_integrand(0.1, k) == doctest::Approx(wigner::fig7_integrand(0.1, -k)).epsilon(1e-14));
}

TEST_CASE("factorized approximation") {
  const auto box = WellState::infinite();
  for (double x : {0.0, 0.4, 2.0}) {
    for (double p : {0.0, 1.1, 6.0}) CHECK(wigner::factorized_approx(box, x, p) >= 0.0);
  }
  CHECK(std::abs(wigner::factorized_approx(box, 0.0, 2.0) - wigner::wigner_infinite_well(0.0, 2.0)) > 1e-3);
}

TEST_CASE("evolved wave function handle") {
  const free::EvolvedState s(WellState::infinite(), 0.05, free::EvolutionMethod::Propagator);
  // The free-evolution tail is algebraic, so a narrow window is rejected.
  try {
    wigner::wigner_integral(WaveFunction::from_evolved(s, 4.0), 0.0, 1.0);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CutoffTooSmall);
  }
  const auto wf = WaveFunction::from_evolved(s, 30.0);
  CHECK(std::abs(wf.psi(0.0) - free::evolve_propagator(WellState::infinite(), 0.0, 0.05)) == 0.0);
}

TEST_CASE("errors") {
  const SpatialGrid x(-1.0, 1.0, 3);
  const MomentumGrid k(-1.0, 1.0, 3);
  try {
    wigner::wigner_field(WellState::finite(kPi / 3.0), WignerSource::ClosedFormInfiniteWell, x, k);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidParams);
  }
  auto wf = WaveFunction::oscillator_ground(1.0);
  wf.half_width = 0.5;
  try {
    wigner::wigner_integral(wf, 0.0, 0.0);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CutoffTooSmall);
  }
}
