#include "qcfd/solver1d.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qcfd {

double TimeStepRule::tau(double h) const {
  switch (kind) {
    case Kind::H: return h;
    case Kind::HOver20: return h / 20.0;
    case Kind::HSquared: return h * h;
    case Kind::Fixed: return fixed_tau;
  }
  return h;
}

std::string TimeStepRule::name() const {
  switch (kind) {
    case Kind::H: return "h";
    case Kind::HOver20: return "h/20";
    case Kind::HSquared: return "h^2";
    case Kind::Fixed: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g", fixed_tau);
      return buf;
    }
  }
  return "h";
}

TimeStepRule TimeStepRule::parse(const std::string& text) {
  if (text == "h") return {Kind::H};
  if (text == "h/20") return {Kind::HOver20};
  if (text == "h^2" || text == "h2" || text == "h*h") return {Kind::HSquared};
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !(v > 0.0)) {
    throw ConfigurationError("unknown time-step rule '" + text + "'");
  }
  return {Kind::Fixed, v};
}

Eigen::Index step_count(double t_final, double tau) {
  if (!(tau > 0.0)) throw ConfigurationError("time step must be positive");
  return std::max<Eigen::Index>(1, static_cast<Eigen::Index>(std::ceil(t_final / tau - 1e-9)));
}

void validate(const Problem1D& p, const SchemeSpec& scheme) {
  require_fractional_order(p.alpha, "Problem1D");
  if (p.K1 < 0.0 || p.K2 < 0.0 || (p.K1 == 0.0 && p.K2 == 0.0)) {
    throw ConfigurationError("diffusion coefficients must be nonnegative and not both zero");
  }
  if (p.K1 * p.K2 != 0.0 && !scheme.symmetric_c) {
    throw ConfigurationError("scheme '" + scheme.label +
                             "' has c_{-1} != c_1 and cannot be used for two-sided problems");
  }
  if (!(p.x_right > p.x_left) || !(p.t_final > 0.0)) {
    throw ConfigurationError("empty space or time interval");
  }
  if (!p.source || !p.initial || !p.left_bc || !p.right_bc) {
    throw ConfigurationError("problem is missing source, initial or boundary data");
  }
  auto mismatch = [](double a, double b) { return std::abs(a - b) > 1e-10 * (1.0 + std::abs(a)); };
  if (mismatch(p.initial(p.x_left), p.left_bc(0.0)) ||
      mismatch(p.initial(p.x_right), p.right_bc(0.0))) {
    throw ConfigurationError("initial data is incompatible with the boundary data");
  }
}

LinearSystemBundle assemble_cn(const Problem1D& problem, const SchemeSpec& scheme,
                               Eigen::Index N, double tau) {
  validate(problem, scheme);
  if (N < 2) throw ConfigurationError("need N >= 2");
  if (!(tau > 0.0)) throw ConfigurationError("time step must be positive");
  LinearSystemBundle b;
  b.problem = problem;
  b.scheme = scheme;
  b.N = N;
  b.h = (problem.x_right - problem.x_left) / static_cast<double>(N);
  b.tau = tau;
  b.w = combined_weights(scheme.d, grunwald_coeffs(problem.alpha, N + 1)).head(N + 1);

  const Eigen::Index n = N - 1;
  b.T = assemble_T(scheme.c, n);
  b.A = assemble_A(b.w, n).dense();
  const double r = tau / (2.0 * std::pow(b.h, problem.alpha));
  const Eigen::MatrixXd op = r * (problem.K1 * b.A + problem.K2 * b.A.transpose());
  const Eigen::MatrixXd T = b.T.dense();
  b.left = T - op;
  b.right = T + op;
  b.lu = DenseLU(b.left);

  // Row i (1-based) couples to U_0 through K1 w_{i+1} (+ K2 w_0 for i = 1) and to U_N
  // through K2 w_{N-i+1} (+ K1 w_0 for i = N-1).
  b.left_boundary_weights.resize(n);
  b.right_boundary_weights.resize(n);
  for (Eigen::Index i = 1; i <= n; ++i) {
    b.left_boundary_weights(i - 1) = problem.K1 * b.w(i + 1);
    b.right_boundary_weights(i - 1) = problem.K2 * b.w(N - i + 1);
  }
  b.left_boundary_weights(0) += problem.K2 * b.w(0);
  b.right_boundary_weights(n - 1) += problem.K1 * b.w(0);
  b.left_boundary_weights *= r;
  b.right_boundary_weights *= r;
  return b;
}

Eigen::VectorXd boundary_vector(const LinearSystemBundle& b, double t_n) {
  const Problem1D& p = b.problem;
  const double t_next = t_n + b.tau;
  const double l0 = p.left_bc(t_n), l1 = p.left_bc(t_next);
  const double r0 = p.right_bc(t_n), r1 = p.right_bc(t_next);
  Eigen::VectorXd H = (l0 + l1) * b.left_boundary_weights + (r0 + r1) * b.right_boundary_weights;
  H(0) += b.scheme.c[0] * (l0 - l1);
  H(b.N - 2) += b.scheme.c[2] * (r0 - r1);
  return H;
}

Eigen::VectorXd source_vector(const LinearSystemBundle& b, double t_n) {
  const double t_half = t_n + 0.5 * b.tau;
  Eigen::VectorXd f(b.N + 1);
  for (Eigen::Index i = 0; i <= b.N; ++i) f(i) = b.problem.source(b.x(i), t_half);
  const Triple& c = b.scheme.c;
  return c[0] * f.segment(0, b.N - 1) + c[1] * f.segment(1, b.N - 1) +
         c[2] * f.segment(2, b.N - 1);
}

Eigen::VectorXd step(const LinearSystemBundle& b, const Eigen::VectorXd& interior, double t_n) {
  const Eigen::VectorXd rhs =
      b.right * interior + boundary_vector(b, t_n) + b.tau * source_vector(b, t_n);
  return b.lu.solve(rhs);
}

SolveResult1D solve(const Problem1D& problem, const SchemeSpec& scheme, Eigen::Index N,
                    const TimeStepRule& rule, bool keep_history) {
  const double h = (problem.x_right - problem.x_left) / static_cast<double>(N);
  const Eigen::Index M = step_count(problem.t_final, rule.tau(h));
  const double tau = problem.t_final / static_cast<double>(M);
  const LinearSystemBundle bundle = assemble_cn(problem, scheme, N, tau);

  SolveResult1D out;
  out.N = N;
  out.M = M;
  out.h = h;
  out.tau = tau;
  out.x.resize(N + 1);
  for (Eigen::Index i = 0; i <= N; ++i) out.x(i) = bundle.x(i);

  Eigen::VectorXd U(N - 1);
  for (Eigen::Index i = 1; i < N; ++i) U(i - 1) = problem.initial(out.x(i));
  auto full = [&](const Eigen::VectorXd& inner, double t) {
    Eigen::VectorXd u(N + 1);
    u(0) = problem.left_bc(t);
    u.segment(1, N - 1) = inner;
    u(N) = problem.right_bc(t);
    return u;
  };
  if (keep_history) out.history.push_back(full(U, 0.0));
  for (Eigen::Index n = 0; n < M; ++n) {
    const double t_n = tau * static_cast<double>(n);
    U = step(bundle, U, t_n);
    if (keep_history) out.history.push_back(full(U, tau * static_cast<double>(n + 1)));
  }
  out.u = full(U, problem.t_final);
  return out;
}

double discrete_l2(const Eigen::VectorXd& U, const Eigen::VectorXd& V, double h) {
  if (U.size() != V.size()) throw ConfigurationError("discrete_l2: length mismatch");
  return std::sqrt(h * (U - V).squaredNorm());
}

}  // namespace qcfd
