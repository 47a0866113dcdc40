#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qcfd/errors.hpp"
#include "qcfd/harness.hpp"

using namespace qcfd;

namespace {

double error_2d(const char* label, double a, double b, Eigen::Index N, const char* rule) {
  ConvergenceRequest req;
  req.example = "4.3";
  req.label = label;
  req.alpha = a;
  req.beta2 = b;
  req.rule = TimeStepRule::parse(rule);
  return run_single(req, N);
}

Eigen::MatrixXd half_lambda(const SchemeSpec& s, double order, Eigen::Index n, double h, double tau) {
  const Eigen::MatrixXd A = assemble_A(combined_weights(s.d, grunwald_coeffs(order, n)), n).dense();
  return (0.5 * tau * std::pow(h, -order)) * (A + A.transpose());
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
  Eigen::MatrixXd K(X.rows() * Y.rows(), X.cols() * Y.cols());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) K.block(i * Y.rows(), j * Y.cols(), Y.rows(), Y.cols()) = X(i, j) * Y;
  }
  return K;
}

}  // namespace

TEST_CASE("zero data stays zero") {
  Problem2D p;
  p.alpha = 1.3;
  p.beta2 = 1.6;
  p.t_final = 0.5;
  p.source = [](double, double, double) { return 0.0; };
  p.initial = [](double, double) { return 0.0; };
  const SolveResult2D r = adi_solve(p, "4", 12, TimeStepRule::parse("h"));
  CHECK(r.u.cwiseAbs().maxCoeff() == 0.0);
  CHECK(r.M == 6);
  CHECK(r.u.rows() == 13);
}

TEST_CASE("one ADI step differs from unsplit Crank-Nicolson at third order in tau") {
  const Eigen::Index N = 8, n = N - 1;
  const double h = 1.0 / N, a = 1.4, b = 1.7;
  const SchemeSpec sx = build_second_order(4, a), sy = build_second_order(4, b);
  const Eigen::MatrixXd Tx = assemble_T(sx.c, n).dense(), Ty = assemble_T(sy.c, n).dense();

  Problem2D p;
  p.alpha = a;
  p.beta2 = b;
  p.source = [](double, double, double) { return 0.0; };
  p.initial = [](double x, double y) { return std::sin(M_PI * x) * x * y * (1.0 - y); };
  Eigen::MatrixXd U0(n, n);
  for (Eigen::Index i = 1; i <= n; ++i)
    for (Eigen::Index j = 1; j <= n; ++j) U0(i - 1, j - 1) = p.initial(i * h, j * h);
  const Eigen::VectorXd u0 = Eigen::Map<const Eigen::VectorXd>(U0.data(), n * n);

  double prev = 0.0;
  for (double tau : {0.004, 0.002, 0.001}) {
    p.t_final = tau;
    std::ostringstream rule;
    rule.precision(17);
    rule << tau;
    const SolveResult2D r = adi_solve(p, sx, sy, N, TimeStepRule::parse(rule.str()));
    REQUIRE(r.M == 1);
    const Eigen::MatrixXd Lx = half_lambda(sx, a, n, h, tau), Ly = half_lambda(sy, b, n, h, tau);
    // vec(X U Y^T) = (Y kron X) vec(U) for column-major vec.
    const Eigen::MatrixXd TT = kron(Ty, Tx);
    const Eigen::MatrixXd split = kron(Ty, Lx) + kron(Ly, Tx);
    const Eigen::VectorXd u1 = (TT - split).partialPivLu().solve((TT + split) * u0);
    const Eigen::MatrixXd U = r.interior();
    const double defect = (Eigen::Map<const Eigen::VectorXd>(U.data(), n * n) - u1).norm();
    if (prev > 0.0) CHECK(prev / defect >= 7.0);
    prev = defect;
  }
}

TEST_CASE("swapping the axes transposes the solution") {
  const Eigen::Index N = 16;
  const auto p = std::get<Problem2D>(builtin_problem("4.3", 1.3, 1.7));
  const auto q = std::get<Problem2D>(builtin_problem("4.3", 1.7, 1.3));
  for (const char* label : {"4", "5", "(4,5)"}) {
    const SolveResult2D r = adi_solve(p, label, N, TimeStepRule::parse("h"));
    const SolveResult2D s = adi_solve(q, label, N, TimeStepRule::parse("h"));
    CHECK((r.u - s.u.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * r.u.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("two-dimensional reference values") {
  const double e16 = error_2d("4", 1.1, 1.9, 16, "h"), e32 = error_2d("4", 1.1, 1.9, 32, "h");
  CHECK(e32 <= 3.0 * 9.35e-8);
  CHECK(e32 >= 9.35e-8 / 3.0);
  CHECK(std::log2(e16 / e32) == doctest::Approx(2.01).epsilon(0.15 / 2.01));

  const double f16 = error_2d("(4,5)", 1.4, 1.5, 16, "h/20");
  const double f32 = error_2d("(4,5)", 1.4, 1.5, 32, "h/20");
  CHECK(f32 <= 3.0 * 6.92e-9);
  CHECK(f32 >= 6.92e-9 / 3.0);
  CHECK(std::log2(f16 / f32) == doctest::Approx(2.90).epsilon(0.2 / 2.90));
}

TEST_CASE("two-dimensional norm and validation") {
  const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(9, 9);
  CHECK(discrete_l2_2d(ones, Eigen::MatrixXd::Zero(9, 9), 0.1) == doctest::Approx(0.9));
  CHECK(discrete_l2_2d(ones, ones, 0.1) == 0.0);
  CHECK_THROWS_AS(discrete_l2_2d(ones, Eigen::MatrixXd::Zero(9, 8), 0.1), ConfigurationError);

  auto p = std::get<Problem2D>(builtin_problem("4.3", 1.5));
  SchemeSpec lopsided = build_second_order(4, 1.5);
  lopsided.c = {0.2, 0.8, 0.0};
  lopsided.symmetric_c = false;
  CHECK_THROWS_AS(adi_solve(p, lopsided, lopsided, 8, {}), ConfigurationError);
  p.beta2 = 2.5;
  CHECK_THROWS_AS(adi_solve(p, "4", 8, {}), DomainError);
  CHECK_THROWS_AS(builtin_problem("4.3", 1.5, 0.9), DomainError);
}
