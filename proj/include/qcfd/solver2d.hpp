#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "qcfd/schemes.hpp"
#include "qcfd/solver1d.hpp"

namespace qcfd {

using PlaneTimeFn = std::function<double(double x, double y, double t)>;

/// u_t = (0D_x^a + xD_1^a) u + (0D_y^b + yD_1^b) u + f on (0,1)^2, u = 0 on the boundary.
struct Problem2D {
  double alpha = 1.5;  // order in x
  double beta2 = 1.5;  // order in y
  double t_final = 1.0;
  PlaneTimeFn source;
  std::function<double(double x, double y)> initial;
  PlaneTimeFn exact;  // optional
};

struct SolveResult2D {
  Eigen::Index N = 0, M = 0;
  double h = 0.0, tau = 0.0;
  Eigen::MatrixXd u;  // (N+1) x (N+1), u(i,j) ~ u(x_i, y_j)

  Eigen::MatrixXd interior() const { return u.block(1, 1, N - 1, N - 1); }
};

/// Peaceman-Rachford factorized Crank-Nicolson step per direction:
///   L_x U^{n+1} L_y^T = R_x U^n R_y^T + tau C_x F^{n+1/2} C_y^T,
/// L = T - (tau/2) h^-a (A + A^T), R = T + (tau/2) h^-a (A + A^T).
SolveResult2D adi_solve(const Problem2D& problem, const SchemeSpec& scheme_x,
                        const SchemeSpec& scheme_y, Eigen::Index N, const TimeStepRule& rule);

/// Builds the scheme from `label` separately for each direction's order.
SolveResult2D adi_solve(const Problem2D& problem, const std::string& label, Eigen::Index N,
                        const TimeStepRule& rule);

/// sqrt(h^2 sum (U - V)^2) over the given (interior) values.
double discrete_l2_2d(const Eigen::MatrixXd& U, const Eigen::MatrixXd& V, double h);

}  // namespace qcfd
