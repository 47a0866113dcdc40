#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "qcfd/linalg.hpp"
#include "qcfd/schemes.hpp"

namespace qcfd {

using SpaceTimeFn = std::function<double(double x, double t)>;
using SpaceFn = std::function<double(double x)>;
using TimeFn = std::function<double(double t)>;

/// u_t = K1 0D_x^a u + K2 xD_R^a u + f on (x_L, x_R) x (0, T].
struct Problem1D {
  double alpha = 1.5;
  double K1 = 1.0, K2 = 0.0;
  double x_left = 0.0, x_right = 1.0;
  double t_final = 1.0;
  SpaceTimeFn source;
  SpaceFn initial;
  TimeFn left_bc, right_bc;
  SpaceTimeFn exact;  // optional
};

/// Couples the time step to the mesh width.
struct TimeStepRule {
  enum class Kind { H, HOver20, HSquared, Fixed };
  Kind kind = Kind::H;
  double fixed_tau = 0.0;

  double tau(double h) const;
  std::string name() const;
  /// Accepts "h", "h/20", "h^2" (or "h2"), or a positive number.
  static TimeStepRule parse(const std::string& text);
};

/// Assembled Crank-Nicolson system, reused across all time steps.
struct LinearSystemBundle {
  Problem1D problem;
  SchemeSpec scheme;
  Eigen::Index N = 0;
  double h = 0.0, tau = 0.0;
  Eigen::VectorXd w;        // combined weights w_0..w_N
  Tridiag T;
  Eigen::MatrixXd A;        // (N-1)x(N-1) lower Hessenberg Toeplitz
  Eigen::MatrixXd left, right;
  DenseLU lu;
  Eigen::VectorXd left_boundary_weights, right_boundary_weights;  // coefficients of U_0, U_N

  double x(Eigen::Index i) const { return problem.x_left + h * static_cast<double>(i); }
};

/// Rejects inconsistent problem data (orders, coefficients, boundary compatibility).
void validate(const Problem1D& problem, const SchemeSpec& scheme);

LinearSystemBundle assemble_cn(const Problem1D& problem, const SchemeSpec& scheme,
                               Eigen::Index N, double tau);

/// Boundary contribution H^n for the step t_n -> t_n + tau.
Eigen::VectorXd boundary_vector(const LinearSystemBundle& bundle, double t_n);

/// Compact-weighted source sum_o c_o f(x_{i+o}, t_n + tau/2) at interior nodes.
Eigen::VectorXd source_vector(const LinearSystemBundle& bundle, double t_n);

/// Advances interior values U^n (length N-1) to U^{n+1}.
Eigen::VectorXd step(const LinearSystemBundle& bundle, const Eigen::VectorXd& interior,
                     double t_n);

struct SolveResult1D {
  Eigen::Index N = 0;
  Eigen::Index M = 0;
  double h = 0.0, tau = 0.0;
  Eigen::VectorXd x;  // nodes x_0..x_N
  Eigen::VectorXd u;  // values at t_final, boundaries included
  std::vector<Eigen::VectorXd> history;

  Eigen::VectorXd interior() const { return u.segment(1, N - 1); }
};

/// M = ceil(T/tau) uniform steps of length T/M.
SolveResult1D solve(const Problem1D& problem, const SchemeSpec& scheme, Eigen::Index N,
                    const TimeStepRule& rule, bool keep_history = false);

/// sqrt(h sum (U_i - V_i)^2) over the given (interior) values.
double discrete_l2(const Eigen::VectorXd& U, const Eigen::VectorXd& V, double h);

Eigen::Index step_count(double t_final, double tau);

}  // namespace qcfd
