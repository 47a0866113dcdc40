#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qcfd/errors.hpp"
#include "qcfd/special_functions.hpp"

using namespace qcfd;

TEST_CASE("gamma at known points") {
  CHECK(qcfd::gamma(4.0) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(qcfd::gamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(qcfd::gamma(2.5) == doctest::Approx(1.5 * 0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(qcfd::gamma(-0.5) == doctest::Approx(-2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("gamma agrees with the C library on a grid") {
  for (double x = -3.75; x < 9.0; x += 0.125) {
    if (std::floor(x) == x && x <= 0.0) continue;
    CHECK(qcfd::gamma(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
  }
}

TEST_CASE("recurrence Gamma(x+1) = x Gamma(x)") {
  for (double x = -2.9; x < 7.0; x += 0.173) {
    CHECK(qcfd::gamma(x + 1.0) == doctest::Approx(x * qcfd::gamma(x)).epsilon(1e-12));
  }
}

TEST_CASE("poles") {
  CHECK_THROWS_AS(qcfd::gamma(0.0), DomainError);
  CHECK_THROWS_AS(qcfd::gamma(-2.0), DomainError);
  CHECK(rgamma(0.0) == 0.0);
  CHECK(rgamma(-3.0) == 0.0);
  CHECK(rgamma(0.5) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(sin_pi(3.0) == 0.0);
  CHECK(sin_pi(0.5) == doctest::Approx(1.0));
}

TEST_CASE("monomial derivative examples") {
  CHECK(rl_monomial_deriv({3.0, 1.5, Side::Left}, 1.0) ==
        doctest::Approx(std::tgamma(4.0) / std::tgamma(2.5)).epsilon(1e-12));
  CHECK(rl_monomial_deriv({4.5, 1.5, Side::Left}, 1.0) ==
        doctest::Approx(std::tgamma(5.5) / 6.0).epsilon(1e-12));
  CHECK(rl_monomial_deriv({0.0, 1.5, Side::Left}, 0.5) ==
        doctest::Approx(std::pow(0.5, -1.5) / std::tgamma(-0.5)).epsilon(1e-12));
}

TEST_CASE("order two reduces to the classical second derivative") {
  for (double s : {2.0, 3.0, 3.7, 5.25}) {
    for (double x : {0.1, 0.4, 0.85}) {
      const double classical = s * (s - 1.0) * std::pow(x, s - 2.0);
      CHECK(rl_monomial_deriv({s, 2.0, Side::Left}, x) ==
            doctest::Approx(classical).epsilon(1e-10));
    }
  }
}

TEST_CASE("left and right derivatives mirror each other") {
  for (double s : {0.0, 1.0, 3.3}) {
    for (double x : {0.2, 0.5, 0.9}) {
      CHECK(rl_monomial_deriv({s, 1.7, Side::Right}, x) ==
            doctest::Approx(rl_monomial_deriv({s, 1.7, Side::Left}, 1.0 - x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("anchored endpoint") {
  CHECK_THROWS_AS(rl_monomial_deriv({0.0, 1.5, Side::Left}, 0.0), DomainError);
  CHECK(rl_monomial_deriv({3.0, 1.5, Side::Left}, 0.0) == 0.0);
  CHECK(rl_monomial_deriv({1.0, 2.0, Side::Left}, 0.0) == 0.0);
}
