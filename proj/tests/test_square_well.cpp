#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "quench/square_well.hpp"

using namespace quench;
using well::WellState;

TEST_CASE("position wave functions") {
  const auto box = WellState::infinite();
  CHECK(well::psi0(box, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(well::psi0(box, 1.0)) < 1e-15);
  CHECK(well::psi0(box, 1.5) == 0.0);

  const auto w = WellState::finite(kPi / 3.0);
  CHECK(w.kappa() == doctest::Approx(w.k0() * std::sqrt(3.0)).epsilon(1e-14));
  CHECK(well::psi0(w, 1.0 - 1e-13) == doctest::Approx(well::psi0(w, 1.0 + 1e-13)).epsilon(1e-12));
  CHECK(well::psi0_derivative(w, 1.0 - 1e-12) == doctest::Approx(well::psi0_derivative(w, 1.0 + 1e-12)).epsilon(1e-10));
  for (double x : {0.2, 0.9, 1.7, 4.0}) CHECK(well::psi0(w, x) == well::psi0(w, -x));

  const auto d = WellState::delta(2.0);
  CHECK(well::psi0(d, 0.7) == doctest::Approx(oracle::delta_psi(2.0, 0.7)).epsilon(1e-15));
}

TEST_CASE("normalization constant agrees with direct integration") {
  for (double k0a : {0.3, kPi / 3.0, kPi / 2.5, 1.5}) {
    const auto w = WellState::finite(k0a);
    const auto ref = oracle::Well::finite(k0a);
    // c0 multiplies cos(k0 x) / cos(k0 a) inside the well.
    const double k0 = w.k0();
    const double kappa = w.kappa();
    const double closed = 1.0 / std::sqrt(1.0 / kappa + (1.0 + kappa * kappa / (k0 * k0)) + kappa / (k0 * k0));
    CHECK(w.c0() == doctest::Approx(closed).epsilon(1e-14));
    CHECK(w.c0() == doctest::Approx(ref.c0 * std::cos(k0a)).epsilon(1e-14));
    const double norm = oracle::simpson_pieces([&](double x) { return std::pow(well::psi0(w, x), 2); },
                                               {0.0, 1.0, 1.0 + 40.0 / w.kappa()}, 20000);
    CHECK(2.0 * norm == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("momentum amplitudes") {
  CHECK(well::psi0_momentum(WellState::delta(1.0), 0.0) == doctest::Approx(2.0 / std::sqrt(2.0 * kPi)).epsilon(1e-14));

  const auto w = WellState::finite(kPi / 2.5);
  const auto ref = oracle::Well::finite(kPi / 2.5);
  for (int i = 0; i <= 20; ++i) {
    const double k = -10.0 + i;
    CHECK(well::psi0_momentum(w, k) == doctest::Approx(ref.momentum(k)).epsilon(1e-8));
  }
  // k = k0 sits on a removable singularity.
  CHECK(well::psi0_momentum(w, w.k0()) == doctest::Approx(ref.momentum(w.k0())).epsilon(1e-8));

  const auto box = WellState::infinite();
  const auto rb = oracle::Well::infinite();
  const double k0 = box.k0();
  const double at = well::psi0_momentum(box, k0);
  CHECK(at == doctest::Approx(well::psi0_momentum(box, k0 * (1.0 + 1e-5))).epsilon(1e-5));
  CHECK(at == doctest::Approx(rb.momentum(k0)).epsilon(1e-8));
  for (double k : {0.0, 0.9, 3.3, 7.0}) {
    CHECK(well::psi0_momentum(box, k) == doctest::Approx(rb.momentum(k)).epsilon(1e-8));
    CHECK(well::psi0_momentum(box, k) == well::psi0_momentum(box, -k));
  }
}

TEST_CASE("complex continuation agrees on the real axis") {
  const auto w = WellState::finite(kPi / 3.0);
  for (double k : {0.1, 2.5, 9.0}) {
    CHECK(std::abs(well::psi0_momentum(w, complex(k, 0.0)) - well::psi0_momentum(w, k)) < 1e-13);
  }
}

TEST_CASE("moments") {
  const auto box = well::moments(WellState::infinite());
  CHECK(box.x2 == doctest::Approx(1.0 / 3.0 - 2.0 / (kPi * kPi)).epsilon(1e-10));
  CHECK(box.p2 == doctest::Approx(kPi * kPi / 4.0).epsilon(1e-8));

  const auto delta = well::moments(WellState::delta(1.0));
  CHECK(delta.x2 == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(delta.p2 == doctest::Approx(1.0).epsilon(1e-8));

  // Finite well: <p^2> = integral of psi'^2 in position space.
  const double k0a = kPi / 2.5;
  const auto ref = oracle::Well::finite(k0a);
  const auto m = well::moments(WellState::finite(k0a));
  const std::vector<double> pts{0.0, 1.0, ref.half_width()};
  const double p2 = 2.0 * oracle::simpson_pieces([&](double x) { return std::pow(ref.dpsi(x), 2); }, pts, 40000);
  const double x2 = 2.0 * oracle::simpson_pieces([&](double x) { return x * x * std::pow(ref.psi(x), 2); }, pts, 40000);
  CHECK(m.p2 == doctest::Approx(p2).epsilon(1e-7));
  CHECK(m.x2 == doctest::Approx(x2).epsilon(1e-9));
}

TEST_CASE("Parseval") {
  for (const auto& w : {WellState::finite(kPi / 3.0), WellState::infinite(), WellState::delta(1.3)}) {
    auto f = [&](double k) { return std::pow(well::psi0_momentum(w, k), 2); };
    const double norm = 2.0 * oracle::simpson(f, 0.0, 4000.0, 4000000);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("finite well approaches the infinite well") {
  const auto box = WellState::infinite();
  const auto near = WellState::finite(kPi / 2.0 - 1e-7);
  for (double x : {0.0, 0.4, 0.95}) CHECK(well::psi0(near, x) == doctest::Approx(well::psi0(box, x)).epsilon(1e-5));
  for (double k : {0.0, 2.0, 6.0}) {
    CHECK(well::psi0_momentum(near, k) == doctest::Approx(well::psi0_momentum(box, k)).epsilon(1e-5));
  }
  CHECK(WellState::from_k0a(kPi / 2.0).branch() == well::WellBranch::InfiniteWell);
  CHECK(WellState::from_k0a(kPi / 3.0).branch() == well::WellBranch::FiniteWell);
}

TEST_CASE("construction errors") {
  for (double k0a : {0.0, -0.2, kPi / 2.0, 2.0}) CHECK_THROWS_AS(WellState::finite(k0a), Error);
  CHECK_THROWS_AS(WellState::delta(0.0), Error);
  CHECK_THROWS_AS(WellState::infinite(-1.0), Error);
  CHECK_THROWS_AS(WellState::from_k0a(1.7), Error);
}

TEST_CASE("support and kinks") {
  const auto w = WellState::finite(kPi / 3.0);
  const double L = w.support_half_width(1e-12);
  CHECK(std::abs(well::psi0(w, L)) <= 1e-12 * 1.0001);
  const auto kinks = w.kinks();
  CHECK(std::find(kinks.begin(), kinks.end(), 1.0) != kinks.end());
  CHECK(std::find(kinks.begin(), kinks.end(), -1.0) != kinks.end());
}
