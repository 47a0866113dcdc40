#pragma once

#include <Eigen/Dense>
#include <functional>

#include "qcfd/schemes.hpp"
#include "qcfd/solver1d.hpp"

namespace qcfd {

/// One-sided Taylor weights: row l holds a^l with sum_j a_j^l j^k = delta_{lk}, k = 0..n+l.
/// Columns run over j = 0..2n; entries with j > n+l are zero.
struct TaylorCoeffTable {
  int n = 0;
  Eigen::MatrixXd a;  // (n+1) x (2n+1)
};

/// n in 0..5; n = 0 yields the trivial table a^0 = (1).
TaylorCoeffTable vandermonde_coeffs(int n);

/// Exact left derivative of the Taylor projection at node i, as weights on u_0..u_{2n}.
/// Zero at i = 0 by convention.
Eigen::VectorXd ds_vector(const TaylorCoeffTable& table, double alpha, Eigen::Index i, double h);

/// Shifted Grunwald row at node i (shift p) acting on the remainder u - (Taylor projection),
/// expressed as weights on u_0..u_N.
Eigen::VectorXd corrected_grunwald_row(int p, const Eigen::VectorXd& g,
                                       const TaylorCoeffTable& table, double alpha,
                                       Eigen::Index i, Eigen::Index N, double h);

/// Rows 1..N-1 of the corrected left-derivative operator: an (N-1) x (N+1) matrix with
///   row_i = sum_p d_p corrected_row_p(i) + sum_o c_o ds(i+o).
Eigen::MatrixXd corrected_operator(const SchemeSpec& scheme, double alpha, int n,
                                   Eigen::Index N, double h);

/// Compact-side matrix C, (N-1) x (N+1), with row i = (c_{-1}, c_0, c_1) at columns i-1..i+1.
Eigen::MatrixXd compact_matrix(const Triple& c, Eigen::Index N);

/// -0D_x^a u + b u = f on (0,1), u(0) = phi0, u(1) = phi1.
struct SteadyProblem {
  double alpha = 1.5;
  std::function<double(double)> b;
  std::function<double(double)> f;
  double phi0 = 0.0, phi1 = 0.0;
  int correction_order = -1;  // < 0 selects the default
  std::function<double(double)> exact;  // optional
};

/// Correction order used when none is requested: min(order + 1, 3).
int default_correction_order(const SchemeSpec& scheme);

/// Nodal solution u_0..u_N.
Eigen::VectorXd steady_solve(const SteadyProblem& problem, const SchemeSpec& scheme,
                             Eigen::Index N);

/// CN stepping with the corrected operator for left-sided problems with arbitrary
/// boundary data. f at x_0 is replaced by the difference quotient of the left boundary data.
SolveResult1D nonhomogeneous_solve(const Problem1D& problem, const SchemeSpec& scheme,
                                   Eigen::Index N, const TimeStepRule& rule, int n = -1);

}  // namespace qcfd
