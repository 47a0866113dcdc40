#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>

#include "qcfd/errors.hpp"

namespace qcfd {

/// Coefficients (c_{-1}, c_0, c_1) or (d_{-1}, d_0, d_1); index with offset + 1.
using Triple = std::array<double, 3>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline void require_fractional_order(double alpha, const char* where) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw DomainError(std::string(where) + ": order must lie in (1, 2]");
  }
}

/// Grunwald-Letnikov weights g_k = (-1)^k binom(alpha, k), k = 0..K,
/// from g_0 = 1, g_k = (1 - (alpha+1)/k) g_{k-1}.
template <typename Scalar = double>
Vector<Scalar> grunwald_coeffs(Scalar alpha, Eigen::Index K) {
  require_fractional_order(static_cast<double>(alpha), "grunwald_coeffs");
  Vector<Scalar> g(K + 1);
  g(0) = Scalar(1);
  for (Eigen::Index k = 1; k <= K; ++k) {
    g(k) = (Scalar(1) - (alpha + Scalar(1)) / Scalar(k)) * g(k - 1);
  }
  return g;
}

/// Weights of the d-combined shifted operator d_{-1} delta_{-1} + d_0 delta_0 + d_1 delta_1:
///   w_0 = d_1 g_0, w_1 = d_0 g_0 + d_1 g_1, w_k = d_{-1} g_{k-2} + d_0 g_{k-1} + d_1 g_k.
/// The result has the same length as g.
template <typename Scalar = double>
Vector<Scalar> combined_weights(const Triple& d, const Vector<Scalar>& g) {
  const Eigen::Index len = g.size();
  Vector<Scalar> w = Vector<Scalar>::Zero(len);
  for (Eigen::Index k = 0; k < len; ++k) {
    Scalar v = Scalar(d[2]) * g(k);
    if (k >= 1) v += Scalar(d[1]) * g(k - 1);
    if (k >= 2) v += Scalar(d[0]) * g(k - 2);
    w(k) = v;
  }
  return w;
}

enum class Direction { Left, Right };

/// Shifted Grunwald difference on nodes 0..N of a uniform grid, samples zero-extended:
///   Left  (delta_{h,p}): h^-a sum_{k>=0} g_k f_{i-k+p}
///   Right (sigma_{h,p}): h^-a sum_{k>=0} g_k f_{i+k-p}
Eigen::VectorXd shifted_apply(const Eigen::VectorXd& samples, double h, double alpha, int shift,
                              Direction direction);

}  // namespace qcfd
