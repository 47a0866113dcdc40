#include "qcfd/linalg.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qcfd {

Eigen::MatrixXd Tridiag::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = diag;
    if (i > 0) m(i, i - 1) = sub;
    if (i + 1 < n) m(i, i + 1) = super;
  }
  return m;
}

Eigen::VectorXd Tridiag::apply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double v = diag * x(i);
    if (i > 0) v += sub * x(i - 1);
    if (i + 1 < n) v += super * x(i + 1);
    y(i) = v;
  }
  return y;
}

Eigen::MatrixXd ToeplitzLower::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= std::min(i + 1, n - 1); ++j) m(i, j) = w(i - j + 1);
  }
  return m;
}

Eigen::VectorXd ToeplitzLower::apply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double v = 0.0;
    for (Eigen::Index j = 0; j <= std::min(i + 1, n - 1); ++j) v += w(i - j + 1) * x(j);
    y(i) = v;
  }
  return y;
}

Tridiag assemble_T(const Triple& c, Eigen::Index n) { return {n, c[0], c[1], c[2]}; }

ToeplitzLower assemble_A(const Eigen::VectorXd& w, Eigen::Index n) {
  if (w.size() < n + 1) throw ConfigurationError("assemble_A: need at least n+1 weights");
  return {n, w.head(n + 1)};
}

std::vector<double> tridiag_eigs(const Triple& c, Eigen::Index n) {
  const double prod = c[0] * c[2];
  if (prod < 0.0) throw NumericalError("tridiag_eigs: complex spectrum (c_{-1} c_1 < 0)");
  std::vector<double> eigs;
  eigs.reserve(n);
  const double amp = 2.0 * std::sqrt(prod);
  for (Eigen::Index j = 1; j <= n; ++j) {
    eigs.push_back(c[1] + amp * std::cos(j * std::numbers::pi / static_cast<double>(n + 1)));
  }
  return eigs;
}

DenseLU::DenseLU(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw ConfigurationError("lu_factor: matrix must be square");
  lu_.compute(m);
  // PartialPivLU never reports singularity; inspect the pivots of U ourselves.
  const double scale = std::max(m.cwiseAbs().maxCoeff(), 1.0e-300);
  const auto& packed = lu_.matrixLU();
  for (Eigen::Index i = 0; i < packed.rows(); ++i) {
    const double piv = std::abs(packed(i, i));
    if (!(piv > 1e-14 * scale)) throw NumericalError("lu_factor: matrix is singular");
  }
}

DenseLU lu_factor(const Eigen::MatrixXd& m) { return DenseLU(m); }

Eigen::VectorXd lu_solve(const DenseLU& lu, const Eigen::VectorXd& rhs) {
  if (rhs.size() != lu.size()) throw ConfigurationError("lu_solve: size mismatch");
  return lu.solve(rhs);
}

SpectralEstimate spectral_radius_estimate(const LinearOperator& apply, Eigen::Index n,
                                          int max_iters, double tol) {
  std::mt19937_64 rng(20240611ULL);
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
  v.normalize();

  // log_growth[k] = sum of log ||B v_j|| for j < k, so ||B^k v_0|| = exp(log_growth[k]).
  std::vector<double> log_growth{0.0};
  SpectralEstimate est;
  double previous = -1.0;
  for (int k = 1; k <= max_iters; ++k) {
    v = apply(v);
    const double norm = v.norm();
    if (norm == 0.0) return {0.0, k, true};
    if (!std::isfinite(norm)) throw NumericalError("spectral_radius_estimate: overflow");
    v /= norm;
    log_growth.push_back(log_growth.back() + std::log(norm));
    if (k % 16 == 0) {
      const int half = k / 2;
      const double rho = std::exp((log_growth[k] - log_growth[half]) / (k - half));
      est = {rho, k, false};
      if (previous > 0.0 && std::abs(rho - previous) <= tol * rho) {
        est.converged = true;
        return est;
      }
      previous = rho;
    }
  }
  if (est.iterations == 0) {
    const int k = max_iters;
    est = {std::exp(log_growth[k] / k), k, false};
  }
  return est;
}

}  // namespace qcfd
