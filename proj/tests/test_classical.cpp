#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "quench/classical.hpp"
#include "quench/free_evolution.hpp"
#include "quench/harmonic_quench.hpp"

using namespace quench;
using classical::ClassicalEnsemble;
using classical::FreeRoute;
using well::WellState;

TEST_CASE("factors of the well ensemble") {
  const auto e = ClassicalEnsemble::from_well(WellState::infinite());
  const auto ref = oracle::Well::infinite();
  for (double x : {0.0, 0.5, 1.2}) CHECK(e.rho_x(x) == doctest::Approx(std::pow(ref.psi(x), 2)).epsilon(1e-14));
  for (double p : {0.0, 1.0, 4.0}) CHECK(e.rho_p(p) == doctest::Approx(std::pow(ref.momentum(p), 2)).epsilon(1e-8));
  CHECK(e.factorized());
  CHECK(!e.gaussian_factors());
  const double np = 2.0 * oracle::simpson([&](double p) { return e.rho_p(p); }, 0.0, 2000.0, 2000000);
  CHECK(np == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("free density against the Simpson oracle") {
  const auto e = ClassicalEnsemble::from_well(WellState::infinite());
  for (double t : {0.05, 0.2, 1.0}) {
    for (double x : {0.0, 0.5, 1.5}) {
      const double ref = oracle::classical_density([&](double y) { return e.rho_x(y); },
                                                   [&](double p) { return e.rho_p(p); }, {-1.0, 0.0, 1.0}, x, t,
                                                   20000);
      CHECK(classical::classical_free_density(e, x, t) == doctest::Approx(ref).epsilon(1e-7));
    }
  }
}

TEST_CASE("routes agree") {
  const auto box = ClassicalEnsemble::from_well(WellState::infinite());
  CHECK(classical::classical_free_density(box, 0.5, 0.2, FreeRoute::Trajectory) ==
        doctest::Approx(classical::classical_free_density(box, 0.5, 0.2, FreeRoute::PositionFirst)).epsilon(1e-6));
  const auto w = ClassicalEnsemble::from_well(WellState::finite(kPi / 3.0));
  for (double x : {0.0, 1.1, 3.0}) {
    CHECK(classical::classical_free_density(w, x, 0.7, FreeRoute::Trajectory) ==
          doctest::Approx(classical::classical_free_density(w, x, 0.7, FreeRoute::PositionFirst)).epsilon(1e-6));
  }
  CHECK(classical::classical_free_density(box, 0.3, 0.0) == doctest::Approx(box.rho_x(0.3)).epsilon(1e-15));
}

TEST_CASE("width") {
  const auto d = ClassicalEnsemble::from_well(WellState::delta(1.0));
  CHECK(classical::classical_width(d, 0.0) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(classical::classical_width(d, 1.0) == doctest::Approx(1.5).epsilon(1e-8));
  for (const auto& w : {WellState::infinite(), WellState::finite(kPi / 2.5), WellState::delta(2.0)}) {
    const auto e = ClassicalEnsemble::from_well(w);
    for (double t : {0.0, 0.3, 2.0}) CHECK(classical::classical_width(e, t) == doctest::Approx(free::width_qm(w, t)).epsilon(1e-14));
  }
  const auto e = ClassicalEnsemble::from_well(WellState::infinite());
  const SpatialGrid g(-30.0, 30.0, 6001);
  const auto profile = classical::classical_free_profile(e, 0.5, g);
  CHECK(integrate_density(profile) == doctest::Approx(1.0).epsilon(2e-3));
}

TEST_CASE("normalization") {
  const auto e = ClassicalEnsemble::from_well(WellState::finite(kPi / 3.0));
  for (double t : {0.1, 1.0}) {
    const double total = 2.0 * oracle::simpson([&](double x) { return classical::classical_free_density(e, x, t); },
                                               0.0, 40.0 + 200.0 * t, 8000);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-4));
  }
}

TEST_CASE("long-time limit") {
  const auto w = WellState::infinite();
  const auto e = ClassicalEnsemble::from_well(w);
  const double t = 20.0;
  const double peak = classical::classical_longtime(e, 0.0);
  double worst = 0.0;
  for (double u = -3.0; u <= 3.0; u += 0.1) {
    worst = std::max(worst, std::abs(t * classical::classical_free_density(e, u * t, t) - classical::classical_longtime(e, u)));
    CHECK(classical::classical_longtime(e, u) == doctest::Approx(free::longtime_limit(w, u)).epsilon(1e-14));
  }
  CHECK(worst < 0.01 * peak);
  const double area = 2.0 * oracle::simpson([&](double u) { return classical::classical_longtime(e, u); }, 0.0, 2000.0, 2000000);
  CHECK(area == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("monotone decay at the origin") {
  const auto e = ClassicalEnsemble::from_well(WellState::infinite());
  const double start = classical::classical_free_density(e, 0.0, 0.0);
  for (double t = 0.01; t <= 0.3; t += 0.01) CHECK(classical::classical_free_density(e, 0.0, t) < start);
}

TEST_CASE("thermal ensemble in the quenched oscillator") {
  const auto params = harmonic::QuenchParams::with_shift(1.0, 0.5, 1.0);
  const auto matched = classical::TemperatureChoice::matched(1.0);
  CHECK(matched.kT == 0.5);
  const SpatialGrid g(-4.0, 6.0, 41);
  for (double t : {0.0, 0.9, 3.0, 7.5}) {
    const auto q = harmonic::density(params, t, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(classical::classical_harmonic_density(params, matched, g[i], t) == doctest::Approx(q.values[i]).epsilon(1e-10));
    }
  }
  const harmonic::QuenchParams same{1.0, 1.0, 0.0};
  const auto hot = ClassicalEnsemble::thermal(1.0, 2.0);
  CHECK(hot.x2() == doctest::Approx(2.0));
  CHECK(hot.p2() == doctest::Approx(2.0));
  for (double t : {0.0, 1.3, 4.0}) {
    CHECK(classical::classical_harmonic_density(same, hot, 0.0, t) == doctest::Approx(1.0 / std::sqrt(2.0 * kPi * 2.0)).epsilon(1e-14));
  }
  const auto g2 = ClassicalEnsemble::gaussian({0.3, 5.0});
  CHECK(classical::classical_harmonic_density(params, g2, 0.0, 0.0) == doctest::Approx(1.0 / std::sqrt(2.0 * kPi * 0.3)).epsilon(1e-14));
}

TEST_CASE("non-Gaussian ensembles are rejected in the oscillator") {
  const auto e = ClassicalEnsemble::from_well(WellState::infinite());
  try {
    classical::classical_harmonic_density(harmonic::QuenchParams{1.0, 0.5, 0.0}, e, 0.0, 1.0);
    FAIL("no throw");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::UnsupportedEnsemble);
    CHECK(to_string(err.code()) == "unsupported-ensemble");
  }
}

TEST_CASE("classical and quantum densities at late and early times") {
  const auto w = WellState::infinite();
  const auto e = ClassicalEnsemble::from_well(w);
  for (double x : {0.0, 1.0, 2.0}) {
    for (double t : {1.5, 2.0, 3.0}) {
      const double q = std::norm(free::evolve_propagator(w, x, t));
      CHECK(std::abs(classical::classical_free_density(e, x, t) - q) < 0.1 * q);
    }
  }
  double early = 0.0;
  for (double t = 0.02; t < 0.3; t += 0.02) {
    const double q = std::norm(free::evolve_propagator(w, 0.0, t));
    early = std::max(early, std::abs(classical::classical_free_density(e, 0.0, t) - q) / q);
  }
  CHECK(early > 0.15);
}
