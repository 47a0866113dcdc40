#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "qcfd/grunwald.hpp"

namespace qcfd {

/// Constant-diagonal tridiagonal matrix built from a compact triple (sub, diag, super).
struct Tridiag {
  Eigen::Index n = 0;
  double sub = 0.0, diag = 1.0, super = 0.0;

  Eigen::MatrixXd dense() const;
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

/// Lower-Hessenberg Toeplitz matrix with entry (i,j) = w_{i-j+1} for i-j >= -1.
struct ToeplitzLower {
  Eigen::Index n = 0;
  Eigen::VectorXd w;  // w_0..w_n

  Eigen::MatrixXd dense() const;
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

Tridiag assemble_T(const Triple& c, Eigen::Index n);
ToeplitzLower assemble_A(const Eigen::VectorXd& w, Eigen::Index n);

/// Eigenvalues c_0 + 2 sqrt(c_{-1} c_1) cos(j pi / (n+1)), j = 1..n.
std::vector<double> tridiag_eigs(const Triple& c, Eigen::Index n);

/// Partial-pivoting LU with an explicit singularity check.
class DenseLU {
 public:
  DenseLU() = default;
  explicit DenseLU(const Eigen::MatrixXd& m);

  Eigen::Index size() const { return lu_.rows(); }
  template <typename Rhs>
  Eigen::MatrixXd solve(const Eigen::MatrixBase<Rhs>& rhs) const {
    return lu_.solve(rhs);
  }

 private:
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

DenseLU lu_factor(const Eigen::MatrixXd& m);
Eigen::VectorXd lu_solve(const DenseLU& lu, const Eigen::VectorXd& rhs);

struct SpectralEstimate {
  double rho = 0.0;
  int iterations = 0;
  bool converged = false;
};

using LinearOperator = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Norm-growth estimate of the spectral radius. The growth rate is averaged over the
/// second half of the iteration history, which damps oscillation from complex pairs.
SpectralEstimate spectral_radius_estimate(const LinearOperator& apply, Eigen::Index n,
                                          int max_iters = 512, double tol = 1e-6);

}  // namespace qcfd
