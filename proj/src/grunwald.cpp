#include "qcfd/grunwald.hpp"

#include <cmath>
#include <cstdlib>

namespace qcfd {

Eigen::VectorXd shifted_apply(const Eigen::VectorXd& samples, double h, double alpha, int shift,
                              Direction direction) {
  if (std::abs(shift) > 1) throw DomainError("shifted_apply: |shift| must be <= 1");
  const Eigen::Index n_nodes = samples.size();
  const Eigen::VectorXd g = grunwald_coeffs(alpha, n_nodes + 1);
  const double scale = std::pow(h, -alpha);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n_nodes);
  for (Eigen::Index i = 0; i < n_nodes; ++i) {
    double acc = 0.0;
    for (Eigen::Index k = 0; k <= n_nodes; ++k) {
      const Eigen::Index j = direction == Direction::Left ? i - k + shift : i + k - shift;
      if (j < 0 || j >= n_nodes) continue;
      acc += g(k) * samples(j);
    }
    out(i) = scale * acc;
  }
  return out;
}

}  // namespace qcfd
