#include "qcfd/stability.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qcfd/linalg.hpp"

namespace qcfd {

double generating_fn(const SchemeSpec& scheme, double alpha, double x) {
  const double b = beta(alpha);
  const double y = std::numbers::pi - x;
  const double bracket = -scheme.d[0] * std::cos((2.0 - b) * y) +
                         scheme.d[1] * std::cos((1.0 - b) * y) -
                         scheme.d[2] * std::cos(b * y);
  return std::pow(2.0 * std::sin(0.5 * x), alpha) * bracket;
}

double generating_fn_truncated(const SchemeSpec& scheme, double alpha, double x,
                               Eigen::Index K) {
  const Eigen::VectorXd w = combined_weights(scheme.d, grunwald_coeffs(alpha, K));
  double acc = 0.0;
  for (Eigen::Index k = 0; k <= K; ++k) acc += w(k) * std::cos((k - 1.0) * x);
  return acc;
}

Definiteness definiteness_check(const SchemeSpec& scheme, double alpha, int samples) {
  if (samples < 256) throw ConfigurationError("definiteness_check: need at least 256 samples");
  Definiteness out;
  out.f_max = -std::numeric_limits<double>::infinity();
  double f_abs_max = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double x = std::numbers::pi * j / (samples - 1);
    const double f = generating_fn(scheme, alpha, x);
    out.f_max = std::max(out.f_max, f);
    f_abs_max = std::max(f_abs_max, std::abs(f));
  }
  out.negative_definite = out.f_max <= 1e-12 && f_abs_max > 1e-12;
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::Unstable: return "unstable";
    default: return "indeterminate";
  }
}

Verdict classify(double rho) {
  if (rho <= 1.0 + 1e-8) return Verdict::Stable;
  if (rho > 1.0 + 1e-6) return Verdict::Unstable;
  return Verdict::Indeterminate;
}

StabilityVerdict iteration_spectral_radius(const SchemeSpec& scheme, double alpha, double K1,
                                           double K2, Eigen::Index N, double tau,
                                           int max_iters, double tol) {
  if (K1 < 0.0 || K2 < 0.0 || (K1 == 0.0 && K2 == 0.0)) {
    throw ConfigurationError("diffusion coefficients must be nonnegative and not both zero");
  }
  if (K1 * K2 != 0.0 && !scheme.symmetric_c) {
    throw ConfigurationError("two-sided problems need a scheme with c_{-1} = c_1");
  }
  if (N < 2 || tau < 0.0) throw ConfigurationError("need N >= 2 and tau >= 0");
  const double h = 1.0 / static_cast<double>(N);
  const Eigen::Index n = N - 1;
  const Eigen::MatrixXd T = assemble_T(scheme.c, n).dense();
  const Eigen::MatrixXd A =
      assemble_A(combined_weights(scheme.d, grunwald_coeffs(alpha, n)), n).dense();
  const double r = tau / (2.0 * std::pow(h, alpha));
  const Eigen::MatrixXd At = r * (K1 * A + K2 * A.transpose());
  const DenseLU lhs(T - At);
  const Eigen::MatrixXd rhs = T + At;

  const SpectralEstimate est = spectral_radius_estimate(
      [&](const Eigen::VectorXd& v) -> Eigen::VectorXd { return lhs.solve(rhs * v); }, n,
      max_iters, tol);

  StabilityVerdict out;
  out.label = scheme.label;
  out.alpha = alpha;
  out.N = N;
  out.tau_over_halpha = tau / std::pow(h, alpha);
  out.f_max = definiteness_check(scheme, alpha).f_max;
  out.rho = est.rho;
  out.iterations = est.iterations;
  out.converged = est.converged;
  out.verdict = classify(est.rho);
  return out;
}

std::vector<StabilityVerdict> stability_sweep(const SchemeSpec& scheme, double alpha, double K1,
                                              double K2, Eigen::Index N,
                                              const std::vector<double>& taus) {
  std::vector<StabilityVerdict> out;
  for (double tau : taus) {
    try {
      out.push_back(iteration_spectral_radius(scheme, alpha, K1, K2, N, tau));
    } catch (const NumericalError&) {
      StabilityVerdict v;
      v.label = scheme.label;
      v.alpha = alpha;
      v.N = N;
      v.tau_over_halpha = tau * std::pow(static_cast<double>(N), alpha);
      v.f_max = definiteness_check(scheme, alpha).f_max;
      v.rho = std::numeric_limits<double>::quiet_NaN();
      out.push_back(v);
    }
  }
  return out;
}

RelaxedConditions relaxed_conditions(const SchemeSpec& s) {
  return {s.c[1] > std::abs(s.c[2]) + std::abs(s.c[0]),
          s.d[2] > std::abs(s.d[1]) + std::abs(s.d[0])};
}

}  // namespace qcfd
