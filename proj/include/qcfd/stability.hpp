#pragma once

#include <string>
#include <vector>

#include "qcfd/schemes.hpp"

namespace qcfd {

/// Real generating function of the combined-weight Toeplitz matrix on [0, pi]:
///   (2 sin(x/2))^a [-d_{-1} cos((2-b)(pi-x)) + d_0 cos((1-b)(pi-x)) - d_1 cos(b(pi-x))].
double generating_fn(const SchemeSpec& scheme, double alpha, double x);

/// Same function from the truncated weight sum sum_{k=0}^{K} w_k cos((k-1)x).
double generating_fn_truncated(const SchemeSpec& scheme, double alpha, double x,
                               Eigen::Index K = 2000);

struct Definiteness {
  double f_max = 0.0;
  bool negative_definite = false;
};

Definiteness definiteness_check(const SchemeSpec& scheme, double alpha, int samples = 4096);

enum class Verdict { Stable, Unstable, Indeterminate };
const char* to_string(Verdict v);

struct StabilityVerdict {
  std::string label;
  double alpha = 0.0;
  Eigen::Index N = 0;
  double tau_over_halpha = 0.0;
  double f_max = 0.0;
  double rho = 0.0;
  int iterations = 0;
  bool converged = false;
  Verdict verdict = Verdict::Indeterminate;
};

Verdict classify(double rho);

/// Spectral radius of B = (T - At)^{-1} (T + At), At = tau/(2 h^a) (K1 A + K2 A^T), h = 1/N.
StabilityVerdict iteration_spectral_radius(const SchemeSpec& scheme, double alpha, double K1,
                                           double K2, Eigen::Index N, double tau,
                                           int max_iters = 512, double tol = 1e-6);

/// Classifies each step size; a numerically singular T - At yields an indeterminate
/// entry with rho = NaN instead of an exception.
std::vector<StabilityVerdict> stability_sweep(const SchemeSpec& scheme, double alpha, double K1,
                                              double K2, Eigen::Index N,
                                              const std::vector<double>& taus);

/// Sufficient conditions conjectured for non-symmetric compact sides.
struct RelaxedConditions {
  bool compact_dominant = false;  // c_0 > |c_1| + |c_{-1}|
  bool shift_dominant = false;    // d_1 > |d_0| + |d_{-1}|
};

RelaxedConditions relaxed_conditions(const SchemeSpec& scheme);

}  // namespace qcfd
