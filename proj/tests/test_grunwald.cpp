#include <doctest.h>

#include <cmath>

#include "qcfd/errors.hpp"
#include "qcfd/grunwald.hpp"
#include "qcfd/special_functions.hpp"

using namespace qcfd;

namespace {

// (-1)^k binom(a, k) from the Gamma function: Gamma(k - a) / (Gamma(-a) Gamma(k + 1)).
double binomial_weight(double a, int k) {
  if (k - a > 0.0) return std::exp(std::lgamma(k - a) - std::lgamma(k + 1.0)) / std::tgamma(-a);
  return std::tgamma(k - a) / (std::tgamma(-a) * std::tgamma(k + 1.0));
}

}  // namespace

TEST_CASE("coefficient examples") {
  const Eigen::VectorXd g2 = grunwald_coeffs(2.0, 3);
  CHECK(g2(0) == 1.0);
  CHECK(g2(1) == -2.0);
  CHECK(g2(2) == 1.0);
  CHECK(g2(3) == 0.0);
  const Eigen::VectorXd g = grunwald_coeffs(1.5, 3);
  CHECK(g(1) == -1.5);
  CHECK(g(2) == 0.375);
  CHECK(g(3) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(grunwald_coeffs(1.1, 1)(1) == doctest::Approx(-1.1));
  CHECK_THROWS_AS(grunwald_coeffs(0.9, 4), DomainError);
}

TEST_CASE("coefficients match the binomial series") {
  for (double a : {1.1, 1.37, 1.5, 1.9}) {
    const Eigen::VectorXd g = grunwald_coeffs(a, 200);
    for (int k = 0; k <= 200; k += 7) {
      CHECK(g(k) == doctest::Approx(binomial_weight(a, k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("coefficient sums telescope to zero") {
  // sum_{k<=K} g_k = (-1)^K binom(a-1, K), which tends to zero.
  for (double a : {1.2, 1.5, 1.8}) {
    const Eigen::VectorXd g = grunwald_coeffs(a, 4000);
    CHECK(g.sum() == doctest::Approx(binomial_weight(a - 1.0, 4000)).epsilon(1e-9));
    CHECK(std::abs(g.sum()) < 1e-3);
  }
}

TEST_CASE("combined weights") {
  const Eigen::VectorXd g = grunwald_coeffs(1.5, 6);
  const Eigen::VectorXd w1 = combined_weights<double>({0.0, 0.0, 1.0}, g);
  CHECK((w1 - g).norm() == 0.0);
  const Eigen::VectorXd w = combined_weights<double>({0.0, 0.25, 0.75}, g);
  CHECK(w(0) == doctest::Approx(0.75));
  CHECK(w(1) == doctest::Approx(-0.875));
  CHECK(w(2) == doctest::Approx(-0.09375));
  const Eigen::VectorXd w0 = combined_weights<double>({0.0, 1.0, 0.0}, g);
  CHECK(w0(0) == 0.0);
  for (int k = 1; k <= 6; ++k) CHECK(w0(k) == g(k - 1));
}

TEST_CASE("combined weights are linear in d") {
  const Eigen::VectorXd g = grunwald_coeffs(1.3, 40);
  const Triple a{0.2, -0.1, 0.9}, b{-0.4, 0.7, 0.3};
  const Triple ab{2.0 * a[0] - 3.0 * b[0], 2.0 * a[1] - 3.0 * b[1], 2.0 * a[2] - 3.0 * b[2]};
  const Eigen::VectorXd lhs = combined_weights(ab, g);
  const Eigen::VectorXd rhs = 2.0 * combined_weights(a, g) - 3.0 * combined_weights(b, g);
  CHECK((lhs - rhs).lpNorm<Eigen::Infinity>() < 1e-14);
}

TEST_CASE("shifted differences") {
  const Eigen::Index N = 40;
  const double h = 1.0 / N;
  CHECK(shifted_apply(Eigen::VectorXd::Zero(N + 1), h, 1.5, 1, Direction::Left).norm() == 0.0);

  Eigen::VectorXd f(N + 1), q(N + 1);
  for (Eigen::Index i = 0; i <= N; ++i) {
    f(i) = std::pow(i * h, 3);
    q(i) = std::sin(3.0 * i * h);
  }
  const Eigen::VectorXd lhs = shifted_apply(2.0 * f - q, h, 1.5, 1, Direction::Left);
  const Eigen::VectorXd rhs =
      2.0 * shifted_apply(f, h, 1.5, 1, Direction::Left) - shifted_apply(q, h, 1.5, 1, Direction::Left);
  CHECK((lhs - rhs).lpNorm<Eigen::Infinity>() < 1e-9 * lhs.lpNorm<Eigen::Infinity>());

  // delta_{h,p} f(x) = delta_{h,p+1} f(x - h): shift by one node.
  const Eigen::VectorXd p0 = shifted_apply(f, h, 1.5, 0, Direction::Left);
  const Eigen::VectorXd p1 = shifted_apply(f, h, 1.5, 1, Direction::Left);
  for (Eigen::Index i = 1; i < N; ++i) CHECK(p0(i) == doctest::Approx(p1(i - 1)).epsilon(1e-14));

  // Right differences of the mirrored samples mirror the left ones.
  const Eigen::VectorXd mirrored = f.reverse();
  const Eigen::VectorXd r = shifted_apply(mirrored, h, 1.5, 1, Direction::Right);
  for (Eigen::Index i = 1; i < N; ++i) CHECK(r(i) == doctest::Approx(p1(N - i)).epsilon(1e-14));
}

TEST_CASE("first-order convergence to the Riemann-Liouville derivative") {
  double prev = 0.0;
  for (int k = 6; k <= 10; ++k) {
    const Eigen::Index N = Eigen::Index(1) << k;
    const double h = 1.0 / static_cast<double>(N);
    Eigen::VectorXd f(N + 1);
    for (Eigen::Index i = 0; i <= N; ++i) f(i) = std::pow(i * h, 3);
    const Eigen::VectorXd d = shifted_apply(f, h, 1.5, 1, Direction::Left);
    double err = 0.0;
    for (Eigen::Index i = 1; i < N; ++i) {
      err = std::max(err, std::abs(d(i) - rl_monomial_deriv({3.0, 1.5, Side::Left}, i * h)));
    }
    if (k > 6) CHECK(prev / err == doctest::Approx(2.0).epsilon(0.1));
    prev = err;
  }
}
