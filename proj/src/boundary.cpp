#include "qcfd/boundary.hpp"

#include <cmath>
#include <vector>

#include "qcfd/special_functions.hpp"

namespace qcfd {
namespace {

// sum_{k=0}^{top} g_k (top-k)^l. Terms reach top^l while the sum is O(top^{l-a}), so the
// accumulation runs in extended precision.
long double grunwald_moment(const Eigen::VectorXd& g, Eigen::Index top, int l) {
  long double S = 0.0L;
  for (Eigen::Index k = 0; k <= top; ++k) {
    long double m = 1.0L;
    for (int e = 0; e < l; ++e) m *= static_cast<long double>(top - k);
    S += static_cast<long double>(g(k)) * m;
  }
  return S;
}

// Gamma(l+1)/Gamma(l+1-a) i^{l-a}: the exact left derivative of x^l at x_i, in units of h^{l-a}.
long double monomial_moment(double alpha, Eigen::Index i, int l) {
  if (i <= 0) return 0.0L;
  const long double a = alpha;
  const long double ratio = l + 1.0L - a > 0.0L
                                ? std::exp(std::lgamma(l + 1.0L) - std::lgamma(l + 1.0L - a))
                                : std::tgamma(l + 1.0L) / std::tgamma(l + 1.0L - a);
  return ratio * std::pow(static_cast<long double>(i), l - a);
}

void require_order_fits(int n, Eigen::Index N) {
  if (2 * static_cast<Eigen::Index>(n) > N) {
    throw ConfigurationError("correction order " + std::to_string(n) + " needs N >= " +
                             std::to_string(2 * n));
  }
}

}  // namespace

TaylorCoeffTable vandermonde_coeffs(int n) {
  if (n < 0 || n > 5) throw ConfigurationError("correction order must be in 0..5");
  TaylorCoeffTable t;
  t.n = n;
  t.a = Eigen::MatrixXd::Zero(n + 1, 2 * n + 1);
  // L a^l = e^l says that a_j^l is the t^l coefficient of the Lagrange basis polynomial
  // ell_j(t) = prod_{i != j} (t - i)/(j - i) on nodes 0..n+l. Numerators and denominators are
  // integers below 10! here, so each weight is computed with a single rounding; elimination on
  // the Vandermonde matrix loses up to 7 digits at n = 5.
  for (int l = 0; l <= n; ++l) {
    const int m = n + l + 1;
    for (int j = 0; j < m; ++j) {
      std::vector<long long> poly{1};  // coefficients in increasing powers of t
      long long denom = 1;
      for (int i = 0; i < m; ++i) {
        if (i == j) continue;
        std::vector<long long> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
          next[k + 1] += poly[k];
          next[k] -= static_cast<long long>(i) * poly[k];
        }
        poly = std::move(next);
        denom *= j - i;
      }
      t.a(l, j) = static_cast<double>(poly[l]) / static_cast<double>(denom);
    }
  }
  return t;
}

Eigen::VectorXd ds_vector(const TaylorCoeffTable& table, double alpha, Eigen::Index i,
                          double h) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * table.n + 1);
  if (i <= 0) return out;
  for (int l = 0; l <= table.n; ++l) {
    const double coeff = gamma(l + 1.0) * rgamma(l + 1.0 - alpha) *
                         std::pow(static_cast<double>(i), l - alpha);
    out += coeff * table.a.row(l).transpose();
  }
  return std::pow(h, -alpha) * out;
}

Eigen::VectorXd corrected_grunwald_row(int p, const Eigen::VectorXd& g,
                                       const TaylorCoeffTable& table, double alpha,
                                       Eigen::Index i, Eigen::Index N, double h) {
  if (p < -1 || p > 1) throw ConfigurationError("shift must be -1, 0 or 1");
  if (i < 1 || i > N - 1) throw ConfigurationError("row index outside 1..N-1");
  require_order_fits(table.n, N);
  const Eigen::Index top = i + p;
  if (g.size() <= top) throw ConfigurationError("not enough Grunwald coefficients");

  Eigen::VectorXd row = Eigen::VectorXd::Zero(N + 1);
  for (Eigen::Index k = 0; k <= top; ++k) row(top - k) += g(k);
  for (int l = 0; l <= table.n; ++l) {
    const double S = static_cast<double>(grunwald_moment(g, top, l));
    row.head(2 * table.n + 1) -= S * table.a.row(l).transpose();
  }
  return std::pow(h, -alpha) * row;
}

Eigen::MatrixXd corrected_operator(const SchemeSpec& scheme, double alpha, int n,
                                   Eigen::Index N, double h) {
  require_fractional_order(alpha, "corrected_operator");
  const TaylorCoeffTable table = vandermonde_coeffs(n);
  require_order_fits(n, N);
  const Eigen::VectorXd g = grunwald_coeffs(alpha, N + 1);
  const Eigen::Index width = 2 * n + 1;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(N - 1, N + 1);
  const double scale = std::pow(h, -alpha);
  for (Eigen::Index i = 1; i < N; ++i) {
    // Raw shifted sums; the Taylor-projection part is added below per power l.
    for (int p = -1; p <= 1; ++p) {
      const double dp = scheme.d[p + 1];
      if (dp == 0.0) continue;
      const Eigen::Index top = i + p;
      for (Eigen::Index k = 0; k <= top; ++k) L(i - 1, top - k) += scale * dp * g(k);
    }
    // The removed Grunwald moments and the re-added exact derivatives nearly cancel far from
    // the boundary; combining them before the a^l weights keeps that cancellation exact to
    // extended precision instead of leaving O(N^{n-a}) round-off in the boundary columns.
    for (int l = 0; l <= n; ++l) {
      long double q = 0.0L;
      for (int o = -1; o <= 1; ++o) q += scheme.c[o + 1] * monomial_moment(alpha, i + o, l);
      for (int p = -1; p <= 1; ++p) {
        if (scheme.d[p + 1] != 0.0) q -= scheme.d[p + 1] * grunwald_moment(g, i + p, l);
      }
      L.row(i - 1).head(width) += (scale * static_cast<double>(q)) * table.a.row(l);
    }
  }
  return L;
}

Eigen::MatrixXd compact_matrix(const Triple& c, Eigen::Index N) {
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(N - 1, N + 1);
  for (Eigen::Index i = 1; i < N; ++i) {
    C(i - 1, i - 1) = c[0];
    C(i - 1, i) = c[1];
    C(i - 1, i + 1) = c[2];
  }
  return C;
}

// Cubic boundary projection: enough for every stencil up to fourth order on grids from N = 8,
// while n = order + 1 would need 2n > 8 points for fourth-order stencils.
int default_correction_order(const SchemeSpec& scheme) { return std::min(scheme.order + 1, 3); }

Eigen::VectorXd steady_solve(const SteadyProblem& prob, const SchemeSpec& scheme,
                             Eigen::Index N) {
  if (!prob.b || !prob.f) throw ConfigurationError("steady problem needs b and f");
  if (N < 2) throw ConfigurationError("need N >= 2");
  const int n = prob.correction_order >= 0 ? prob.correction_order
                                           : default_correction_order(scheme);
  const double h = 1.0 / static_cast<double>(N);
  const Eigen::MatrixXd L = corrected_operator(scheme, prob.alpha, n, N, h);
  const Eigen::MatrixXd C = compact_matrix(scheme.c, N);

  Eigen::VectorXd bvals(N + 1), fvals(N + 1);
  for (Eigen::Index i = 0; i <= N; ++i) {
    const double x = h * static_cast<double>(i);
    bvals(i) = prob.b(x);
    if (bvals(i) < 0.0) throw ConfigurationError("b(x) must be nonnegative");
    fvals(i) = i == 0 ? 0.0 : prob.f(x);
  }
  // The singular parts of D^a u and f cancel at x_0: ds_0 = 0 and f_0 = b_0 u_0.
  fvals(0) = bvals(0) * prob.phi0;

  const Eigen::MatrixXd S = -L + C * bvals.asDiagonal();
  Eigen::VectorXd rhs = C * fvals - S.col(0) * prob.phi0 - S.col(N) * prob.phi1;
  const DenseLU lu(S.middleCols(1, N - 1));
  Eigen::VectorXd u(N + 1);
  u(0) = prob.phi0;
  u.segment(1, N - 1) = lu.solve(rhs);
  u(N) = prob.phi1;
  return u;
}

SolveResult1D nonhomogeneous_solve(const Problem1D& problem, const SchemeSpec& scheme,
                                   Eigen::Index N, const TimeStepRule& rule, int n) {
  validate(problem, scheme);
  if (problem.K2 != 0.0) {
    throw ConfigurationError("boundary correction supports the left derivative only (K2 = 0)");
  }
  if (n < 0) n = default_correction_order(scheme);
  const double len = problem.x_right - problem.x_left;
  const double h = len / static_cast<double>(N);
  const Eigen::Index M = step_count(problem.t_final, rule.tau(h));
  const double tau = problem.t_final / static_cast<double>(M);

  // Corrected operator in the scaled variable; h^-a already accounts for the interval length.
  const Eigen::MatrixXd L = problem.K1 * corrected_operator(scheme, problem.alpha, n, N, h);
  const Eigen::MatrixXd C = compact_matrix(scheme.c, N);
  const Eigen::MatrixXd lhs = C - 0.5 * tau * L;
  const Eigen::MatrixXd rhs_op = C + 0.5 * tau * L;
  const DenseLU lu(lhs.middleCols(1, N - 1));

  SolveResult1D out;
  out.N = N;
  out.M = M;
  out.h = h;
  out.tau = tau;
  out.x.resize(N + 1);
  for (Eigen::Index i = 0; i <= N; ++i) out.x(i) = problem.x_left + h * static_cast<double>(i);

  Eigen::VectorXd u(N + 1), f(N + 1);
  for (Eigen::Index i = 0; i <= N; ++i) u(i) = problem.initial(out.x(i));
  u(0) = problem.left_bc(0.0);
  u(N) = problem.right_bc(0.0);
  for (Eigen::Index step_no = 0; step_no < M; ++step_no) {
    const double t_n = tau * static_cast<double>(step_no);
    const double t_next = tau * static_cast<double>(step_no + 1);
    const double t_half = 0.5 * (t_n + t_next);
    const double left_next = problem.left_bc(t_next);
    const double right_next = problem.right_bc(t_next);
    f(0) = (left_next - u(0)) / tau;
    for (Eigen::Index i = 1; i <= N; ++i) f(i) = problem.source(out.x(i), t_half);
    Eigen::VectorXd rhs = rhs_op * u + tau * (C * f) - lhs.col(0) * left_next -
                          lhs.col(N) * right_next;
    u.segment(1, N - 1) = lu.solve(rhs);
    u(0) = left_next;
    u(N) = right_next;
  }
  out.u = u;
  return out;
}

}  // namespace qcfd
