#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcfd/boundary.hpp"
#include "qcfd/solver1d.hpp"
#include "qcfd/solver2d.hpp"
#include "qcfd/special_functions.hpp"

namespace qcfd {

/// coeff * e^{rate t} * xi^{power + power_alpha * a}, xi = x (left anchor) or 1 - x (right);
/// with `derivative` the Riemann-Liouville derivative of order a from the anchor side is taken.
struct MonomialTerm {
  double coeff = 1.0;
  double power = 0.0;
  double power_alpha = 0.0;
  Side anchor = Side::Left;
  bool derivative = false;
  double time_rate = 0.0;
};

using TermList = std::vector<MonomialTerm>;

double eval_terms(const TermList& terms, double alpha, double x, double t);

/// 1D problem data expressed as term lists; `exact` may be empty.
struct TermProblem1D {
  double alpha = 1.5;
  double K1 = 1.0, K2 = 0.0;
  double t_final = 1.0;
  TermList source, initial, left_bc, right_bc, exact;
};

Problem1D to_problem(const TermProblem1D& spec);

using BuiltinProblem = std::variant<Problem1D, SteadyProblem, Problem2D>;

/// Ids: "4.1", "4.2", "4.add", "4.3", "A.29". `beta2` is the y-order of "4.3".
BuiltinProblem builtin_problem(const std::string& id, double alpha, double beta2 = 0.0);
const std::vector<std::string>& builtin_ids();

/// x^3 (1-x)^3 expanded in the left anchor, and its mirror in the right anchor.
TermList bump_terms(Side anchor);

struct ConvergenceRow {
  Eigen::Index N = 0;
  double error = 0.0;
  std::optional<double> rate;
};

struct ConvergenceReport {
  std::string example, label, tau_rule, norm = "discrete_l2";
  double alpha = 0.0;
  std::optional<double> beta2;
  std::optional<int> correction;
  std::vector<ConvergenceRow> rows;

  void write_csv(std::ostream& os) const;
};

struct ConvergenceRequest {
  std::string example;
  std::string label;
  double alpha = 1.5;
  double beta2 = 0.0;  // 2D only; 0 means "same as alpha"
  std::vector<Eigen::Index> grids;
  TimeStepRule rule;
  int correction = -1;  // boundary-corrected examples; < 0 picks the default
  bool concurrent = true;
};

/// Error against the exact solution at the final time for one grid.
double run_single(const ConvergenceRequest& request, Eigen::Index N);

ConvergenceReport run_convergence(const ConvergenceRequest& request);

/// log2(e_prev / e_cur).
double observed_rate(double e_prev, double e_cur);

}  // namespace qcfd
