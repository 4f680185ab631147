#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qposc/brackets.hpp"

using namespace qposc;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("deformation parameter validation") {
  CHECK_NOTHROW(RealDeformation(0.0, 1.0));
  CHECK_NOTHROW(RealDeformation(1.0, 0.0));
  CHECK_NOTHROW(RealDeformation(1.0, 1.0));
  CHECK_THROWS_AS(RealDeformation(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(RealDeformation(-0.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(RealDeformation(0.5, 1.1), std::domain_error);
  const double nan = std::nan("");
  CHECK_THROWS_AS(RealDeformation(nan, 0.5), std::domain_error);

  CHECK_THROWS_AS(TdDeformation(0.0), std::domain_error);
  CHECK_THROWS_AS(TdDeformation(1.5), std::domain_error);
  CHECK_NOTHROW(TdDeformation(1.0));

  CHECK_THROWS_AS(PhaseDeformation{nan}, std::domain_error);
  CHECK_THROWS_AS(PhaseDeformation::pi_fraction(1, 0), std::domain_error);
}

TEST_CASE("PhaseDeformation normalizes to (-pi, pi]") {
  CHECK(PhaseDeformation(kPi).theta() == doctest::Approx(kPi));
  CHECK(PhaseDeformation(-kPi).theta() == doctest::Approx(kPi));
  CHECK(std::abs(PhaseDeformation(5.0 * kPi / 2.0).theta() - kPi / 2.0) <
        1e-15);
  CHECK(std::abs(PhaseDeformation(-3.0 * kPi / 4.0).theta() +
                 3.0 * kPi / 4.0) < 1e-15);
  CHECK(PhaseDeformation(0.0).theta() == 0.0);
}

TEST_CASE("qp_bracket examples") {
  CHECK(qp_bracket(3.0, RealDeformation(1.0, 1.0)) == 3.0);
  CHECK(qp_bracket(2.0, RealDeformation(0.5, 0.5)) == 1.0);
  // brute-force sum q^2 + qp + p^2 = 0.25 + 0.125 + 0.0625
  CHECK(qp_bracket(3.0, RealDeformation(0.5, 0.25)) ==
        doctest::Approx(0.4375).epsilon(1e-14));
  CHECK(qp_bracket(0.0, RealDeformation(0.5, 0.25)) == 0.0);
  CHECK_THROWS_AS(qp_bracket(-1.0, RealDeformation(0.5, 0.25)),
                  std::domain_error);
}

TEST_CASE("qp_bracket matches the explicit monomial sum") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double q = unit(rng);
    const double p = unit(rng);
    if (q == 0.0 && p == 0.0) continue;
    const int n = trial % 21;
    const double got = qp_bracket(n, RealDeformation(q, p));
    const double want = oracles::brute_qp_bracket(n, q, p);
    CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("qp_bracket is symmetric under q <-> p") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double q = unit(rng);
    const double p = unit(rng);
    if (q == 0.0 && p == 0.0) continue;
    const double x = (trial % 2) ? double(trial % 23) : unit(rng) * 20.0;
    const double a = qp_bracket(x, RealDeformation(q, p));
    const double b = qp_bracket(x, RealDeformation(p, q));
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("qp_bracket reduces to the Tamm-Dancoff bracket on the diagonal") {
  for (int xi = 0; xi <= 20; ++xi) {
    for (int qi = 1; qi <= 10; ++qi) {
      const double q = qi / 10.0;
      CHECK(std::abs(qp_bracket(xi, RealDeformation(q, q)) -
                     td_bracket(xi, q)) < 1e-10);
    }
  }
}

TEST_CASE("qp_bracket reduces to the geometric sum at p = 1") {
  for (int xi = 1; xi <= 20; ++xi) {
    for (double q : {0.1, 0.35, 0.6, 0.85, 0.99}) {
      const double want = (1.0 - std::pow(q, xi)) / (1.0 - q);
      CHECK(qp_bracket(xi, RealDeformation(q, 1.0)) ==
            doctest::Approx(want).epsilon(1e-13));
    }
  }
}

TEST_CASE("unit-square continuation matches the real unit-circle bracket") {
  // For real q in (0,1) the pair (q, 1/q) leaves the unit square, so this
  // checks the raw homogeneous sum against the quotient form directly.
  for (double q : {0.2, 0.5, 0.8}) {
    for (int x = 1; x <= 8; ++x) {
      const double p = 1.0 / q;
      const double quotient =
          (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q);
      const double sum = oracles::brute_qp_bracket(x, q, p);
      CHECK(sum == doctest::Approx(quotient).epsilon(1e-12));
    }
  }
}

TEST_CASE("qp_bracket positivity") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    double q = unit(rng), p = unit(rng);
    if (trial % 3 == 0) q = 0.0;
    if (q == 0.0 && p == 0.0) p = 0.5;
    for (int n = 1; n <= 12; ++n)
      CHECK(qp_bracket(n, RealDeformation(q, p)) > 0.0);
  }
}

TEST_CASE("qp_bracket non-integer arguments stay consistent") {
  const RealDeformation d(0.8, 0.3);
  // Continuous across the integer fast path.
  const double below = qp_bracket(3.0 - 1e-7, d);
  const double at = qp_bracket(3.0, d);
  const double above = qp_bracket(3.0 + 1e-7, d);
  CHECK(std::abs(below - at) < 1e-6);
  CHECK(std::abs(above - at) < 1e-6);
  // Non-integer values agree with the plain quotient where it is well
  // conditioned.
  for (double x : {0.5, 2.5, 7.25, 13.75}) {
    const double quotient =
        (std::pow(0.8, x) - std::pow(0.3, x)) / (0.8 - 0.3);
    CHECK(qp_bracket(x, d) == doctest::Approx(quotient).epsilon(1e-13));
  }
}

TEST_CASE("qp_bracket is continuous across the diagonal switch") {
  for (double q : {0.1, 0.5, 0.9, 1.0}) {
    for (double x : {2.0, 5.0, 13.0, 20.0}) {
      const double just_inside = q - kTdSwitchTol * (1.0 - 1e-3);
      const double just_outside = q - kTdSwitchTol * (1.0 + 1e-3);
      const double a = qp_bracket(x, RealDeformation(q, just_inside));
      const double b = qp_bracket(x, RealDeformation(q, just_outside));
      CHECK(std::abs(a - b) < 1e-8);
    }
  }
}

TEST_CASE("td_bracket") {
  CHECK(td_bracket(1.0, 0.3) == 1.0);
  CHECK(td_bracket(4.0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(td_bracket(2.0, 1.0) == 2.0);
  CHECK(td_bracket(0.0, 0.7) == 0.0);
  CHECK_THROWS_AS(td_bracket(2.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(td_bracket(2.0, 1.2), std::domain_error);
  CHECK_THROWS_AS(td_bracket(-0.5, 0.5), std::domain_error);
}

TEST_CASE("bm_bracket_phase examples") {
  CHECK(bm_bracket_phase(2.0, PhaseDeformation(kPi / 4.0)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(bm_bracket_phase(3.0, PhaseDeformation(kPi / 4.0)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bm_bracket_phase(3.0, PhaseDeformation(1e-13)) == 3.0);
  CHECK_THROWS_AS(bm_bracket_phase(2.5, PhaseDeformation(kPi)),
                  std::domain_error);
}

TEST_CASE("bm_bracket_phase matches the complex-arithmetic bracket") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> angle(0.05, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double th = angle(rng);
    if (std::abs(std::sin(th)) < 1e-3) continue;
    for (int x = 0; x <= 10; ++x) {
      const auto want = oracles::bm_bracket_complex(x, th);
      CHECK(std::abs(want.imag()) < 1e-10);
      CHECK(std::abs(bm_bracket_phase(x, PhaseDeformation(th)) -
                     want.real()) < 1e-10);
    }
  }
}

TEST_CASE("bracket factorials") {
  CHECK(bracket_factorial(0, RealDeformation(0.4, 0.9)) == 1.0);
  CHECK(bracket_factorial(0, TdDeformation(0.5)) == 1.0);
  CHECK(bracket_factorial(0, PhaseDeformation(0.3)) == 1.0);
  CHECK(bracket_factorial(3, TdDeformation(0.5)) ==
        doctest::Approx(0.75).epsilon(1e-15));
  CHECK(bracket_factorial(2, RealDeformation(1.0, 1.0)) == 2.0);
  CHECK(bracket_factorial(4, PhaseDeformation(1e-14)) ==
        doctest::Approx(24.0).epsilon(1e-14));
  CHECK_THROWS_AS(bracket_factorial(-1, TdDeformation(0.5)),
                  std::domain_error);
}
