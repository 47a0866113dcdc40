#include "qcfd/solver2d.hpp"

#include <cmath>

#include "qcfd/boundary.hpp"

namespace qcfd {
namespace {

struct DirectionOps {
  Eigen::MatrixXd right;  // T + (tau/2) Lambda
  Eigen::MatrixXd compact;  // (N-1) x (N+1) c-stencil
  DenseLU left;             // factorization of T - (tau/2) Lambda
};

DirectionOps direction_ops(const SchemeSpec& scheme, double order, Eigen::Index N, double h,
                           double tau) {
  if (!scheme.symmetric_c) {
    throw ConfigurationError("scheme '" + scheme.label +
                             "' has c_{-1} != c_1 and cannot be used for two-sided problems");
  }
  const Eigen::Index n = N - 1;
  const Eigen::MatrixXd T = assemble_T(scheme.c, n).dense();
  const Eigen::MatrixXd A =
      assemble_A(combined_weights(scheme.d, grunwald_coeffs(order, n)), n).dense();
  const Eigen::MatrixXd half_lambda = (0.5 * tau * std::pow(h, -order)) * (A + A.transpose());
  return {T + half_lambda, compact_matrix(scheme.c, N), DenseLU(T - half_lambda)};
}

}  // namespace

SolveResult2D adi_solve(const Problem2D& problem, const SchemeSpec& scheme_x,
                        const SchemeSpec& scheme_y, Eigen::Index N, const TimeStepRule& rule) {
  require_fractional_order(problem.alpha, "Problem2D");
  require_fractional_order(problem.beta2, "Problem2D");
  if (!problem.source || !problem.initial) {
    throw ConfigurationError("2D problem needs source and initial data");
  }
  if (N < 2) throw ConfigurationError("need N >= 2");
  const double h = 1.0 / static_cast<double>(N);
  const Eigen::Index M = step_count(problem.t_final, rule.tau(h));
  const double tau = problem.t_final / static_cast<double>(M);

  const DirectionOps ox = direction_ops(scheme_x, problem.alpha, N, h, tau);
  const DirectionOps oy = direction_ops(scheme_y, problem.beta2, N, h, tau);

  const Eigen::Index n = N - 1;
  Eigen::MatrixXd U(n, n);
  for (Eigen::Index i = 1; i <= n; ++i) {
    for (Eigen::Index j = 1; j <= n; ++j) U(i - 1, j - 1) = problem.initial(i * h, j * h);
  }
  Eigen::MatrixXd F(N + 1, N + 1);
  for (Eigen::Index step_no = 0; step_no < M; ++step_no) {
    const double t_half = tau * (static_cast<double>(step_no) + 0.5);
    for (Eigen::Index i = 0; i <= N; ++i) {
      for (Eigen::Index j = 0; j <= N; ++j) F(i, j) = problem.source(i * h, j * h, t_half);
    }
    const Eigen::MatrixXd rhs = ox.right * U * oy.right.transpose() +
                                tau * (ox.compact * F * oy.compact.transpose());
    // x sweep: solve L_x Y = rhs column by column; y sweep: U L_y^T = Y row by row.
    const Eigen::MatrixXd Y = ox.left.solve(rhs);
    U = oy.left.solve(Y.transpose()).transpose();
  }

  SolveResult2D out;
  out.N = N;
  out.M = M;
  out.h = h;
  out.tau = tau;
  out.u = Eigen::MatrixXd::Zero(N + 1, N + 1);
  out.u.block(1, 1, n, n) = U;
  return out;
}

SolveResult2D adi_solve(const Problem2D& problem, const std::string& label, Eigen::Index N,
                        const TimeStepRule& rule) {
  return adi_solve(problem, parse_scheme(label, problem.alpha),
                   parse_scheme(label, problem.beta2), N, rule);
}

double discrete_l2_2d(const Eigen::MatrixXd& U, const Eigen::MatrixXd& V, double h) {
  if (U.rows() != V.rows() || U.cols() != V.cols()) {
    throw ConfigurationError("discrete_l2_2d: shape mismatch");
  }
  return h * (U - V).norm();
}

}  // namespace qcfd
