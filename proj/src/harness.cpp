#include "qcfd/harness.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>

namespace qcfd {
namespace {

double term_value(const MonomialTerm& term, double alpha, double x, double t) {
  const double s = term.power + term.power_alpha * alpha;
  double v;
  if (term.derivative) {
    v = rl_monomial_deriv({s, alpha, term.anchor}, x);
  } else {
    const double xi = term.anchor == Side::Left ? x : 1.0 - x;
    v = std::pow(xi, s);
  }
  if (term.time_rate != 0.0) v *= std::exp(term.time_rate * t);
  return term.coeff * v;
}

TermList scaled(TermList terms, double factor, double rate, bool derivative) {
  for (auto& term : terms) {
    term.coeff *= factor;
    term.time_rate = rate;
    term.derivative = derivative;
  }
  return terms;
}

TermList concat(std::initializer_list<TermList> lists) {
  TermList out;
  for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
  return out;
}

// 1 + x + x^{3+a}
TermList nonhomogeneous_profile() {
  return {{1.0, 0.0}, {1.0, 1.0}, {1.0, 3.0, 1.0}};
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

double eval_terms(const TermList& terms, double alpha, double x, double t) {
  double acc = 0.0;
  for (const auto& term : terms) acc += term_value(term, alpha, x, t);
  return acc;
}

Problem1D to_problem(const TermProblem1D& spec) {
  Problem1D p;
  p.alpha = spec.alpha;
  p.K1 = spec.K1;
  p.K2 = spec.K2;
  p.t_final = spec.t_final;
  const double a = spec.alpha;
  p.source = [terms = spec.source, a](double x, double t) { return eval_terms(terms, a, x, t); };
  p.initial = [terms = spec.initial, a](double x) { return eval_terms(terms, a, x, 0.0); };
  p.left_bc = [terms = spec.left_bc, a](double t) { return eval_terms(terms, a, 0.0, t); };
  p.right_bc = [terms = spec.right_bc, a](double t) { return eval_terms(terms, a, 1.0, t); };
  if (!spec.exact.empty()) {
    p.exact = [terms = spec.exact, a](double x, double t) { return eval_terms(terms, a, x, t); };
  }
  return p;
}

TermList bump_terms(Side anchor) {
  return {{1.0, 3.0, 0.0, anchor},
          {-3.0, 4.0, 0.0, anchor},
          {3.0, 5.0, 0.0, anchor},
          {-1.0, 6.0, 0.0, anchor}};
}

const std::vector<std::string>& builtin_ids() {
  static const std::vector<std::string> ids = {"4.1", "4.2", "4.add", "4.3", "A.29"};
  return ids;
}

BuiltinProblem builtin_problem(const std::string& id, double alpha, double beta2) {
  require_fractional_order(alpha, "builtin_problem");
  if (id == "4.1") {
    const TermList profile = {{1.0, 3.0, 1.0}};  // x^{3+a}
    TermProblem1D s;
    s.alpha = alpha;
    s.exact = scaled(profile, 1.0, -1.0, false);
    s.initial = profile;
    s.right_bc = {{1.0, 0.0, 0.0, Side::Left, false, -1.0}};
    s.source = concat({scaled(profile, -1.0, -1.0, false), scaled(profile, -1.0, -1.0, true)});
    return to_problem(s);
  }
  if (id == "4.2") {
    const TermList left = bump_terms(Side::Left), right = bump_terms(Side::Right);
    TermProblem1D s;
    s.alpha = alpha;
    s.K1 = s.K2 = 1.0;
    s.exact = scaled(left, 1.0, -1.0, false);
    s.initial = left;
    s.source = concat({scaled(left, -1.0, -1.0, false), scaled(left, -1.0, -1.0, true),
                       scaled(right, -1.0, -1.0, true)});
    return to_problem(s);
  }
  if (id == "4.add") {
    const TermList profile = nonhomogeneous_profile();
    TermProblem1D s;
    s.alpha = alpha;
    s.exact = scaled(profile, 1.0, -1.0, false);
    s.initial = profile;
    s.left_bc = {{1.0, 0.0, 0.0, Side::Left, false, -1.0}};
    s.right_bc = {{3.0, 0.0, 0.0, Side::Left, false, -1.0}};
    s.source = concat({scaled(profile, -1.0, -1.0, false), scaled(profile, -1.0, -1.0, true)});
    return to_problem(s);
  }
  if (id == "A.29") {
    const TermList profile = nonhomogeneous_profile();
    const TermList f = concat({scaled(profile, 1.0, 0.0, true), scaled(profile, -1.0, 0.0, false)});
    SteadyProblem s;
    s.alpha = alpha;
    s.b = [](double) { return 1.0; };
    s.f = [f, alpha](double x) { return eval_terms(f, alpha, x, 0.0); };
    s.phi0 = -1.0;
    s.phi1 = -3.0;
    s.exact = [profile, alpha](double x) { return -eval_terms(profile, alpha, x, 0.0); };
    return s;
  }
  if (id == "4.3") {
    const double b2 = beta2 > 0.0 ? beta2 : alpha;
    require_fractional_order(b2, "builtin_problem");
    const TermList bump = bump_terms(Side::Left);
    const TermList deriv = concat({scaled(bump_terms(Side::Left), 1.0, 0.0, true),
                                   scaled(bump_terms(Side::Right), 1.0, 0.0, true)});
    Problem2D p;
    p.alpha = alpha;
    p.beta2 = b2;
    p.initial = [bump](double x, double y) {
      return eval_terms(bump, 2.0, x, 0.0) * eval_terms(bump, 2.0, y, 0.0);
    };
    p.exact = [bump](double x, double y, double t) {
      return std::exp(-t) * eval_terms(bump, 2.0, x, 0.0) * eval_terms(bump, 2.0, y, 0.0);
    };
    p.source = [bump, deriv, alpha, b2](double x, double y, double t) {
      const double X = eval_terms(bump, alpha, x, 0.0), Y = eval_terms(bump, b2, y, 0.0);
      const double DX = eval_terms(deriv, alpha, x, 0.0), DY = eval_terms(deriv, b2, y, 0.0);
      return -std::exp(-t) * (X * Y + DX * Y + X * DY);
    };
    return p;
  }
  throw ConfigurationError("unknown example '" + id + "'");
}

double observed_rate(double e_prev, double e_cur) { return std::log2(e_prev / e_cur); }

double run_single(const ConvergenceRequest& req, Eigen::Index N) {
  const BuiltinProblem problem = builtin_problem(req.example, req.alpha, req.beta2);
  if (const auto* p2 = std::get_if<Problem2D>(&problem)) {
    const SolveResult2D r = adi_solve(*p2, req.label, N, req.rule);
    Eigen::MatrixXd exact(N - 1, N - 1);
    for (Eigen::Index i = 1; i < N; ++i) {
      for (Eigen::Index j = 1; j < N; ++j) {
        exact(i - 1, j - 1) = p2->exact(i * r.h, j * r.h, p2->t_final);
      }
    }
    return discrete_l2_2d(r.interior(), exact, r.h);
  }
  const SchemeSpec scheme = parse_scheme(req.label, req.alpha);
  if (const auto* ps = std::get_if<SteadyProblem>(&problem)) {
    SteadyProblem sp = *ps;
    sp.correction_order = req.correction;
    const Eigen::VectorXd u = steady_solve(sp, scheme, N);
    const double h = 1.0 / static_cast<double>(N);
    Eigen::VectorXd exact(N - 1);
    for (Eigen::Index i = 1; i < N; ++i) exact(i - 1) = sp.exact(i * h);
    return discrete_l2(u.segment(1, N - 1), exact, h);
  }
  const auto& p1 = std::get<Problem1D>(problem);
  const SolveResult1D r = req.example == "4.add"
                              ? nonhomogeneous_solve(p1, scheme, N, req.rule, req.correction)
                              : solve(p1, scheme, N, req.rule);
  Eigen::VectorXd exact(N - 1);
  for (Eigen::Index i = 1; i < N; ++i) exact(i - 1) = p1.exact(r.x(i), p1.t_final);
  return discrete_l2(r.interior(), exact, r.h);
}

ConvergenceReport run_convergence(const ConvergenceRequest& req) {
  if (req.grids.empty()) throw ConfigurationError("no grids requested");
  for (std::size_t k = 1; k < req.grids.size(); ++k) {
    if (req.grids[k] != 2 * req.grids[k - 1]) {
      throw ConfigurationError("grids must double from one row to the next");
    }
  }
  // Validate the configuration once up front so errors surface before any work starts.
  (void)builtin_problem(req.example, req.alpha, req.beta2);
  (void)parse_scheme(req.label, req.alpha);

  std::vector<double> errors(req.grids.size());
  if (req.concurrent) {
    std::vector<std::future<double>> jobs;
    for (Eigen::Index N : req.grids) {
      jobs.push_back(std::async(std::launch::async, [&req, N] { return run_single(req, N); }));
    }
    for (std::size_t k = 0; k < jobs.size(); ++k) errors[k] = jobs[k].get();
  } else {
    for (std::size_t k = 0; k < req.grids.size(); ++k) errors[k] = run_single(req, req.grids[k]);
  }

  ConvergenceReport report;
  report.example = req.example;
  report.label = req.label;
  report.alpha = req.alpha;
  report.tau_rule = req.rule.name();
  if (req.example == "4.3") report.beta2 = req.beta2 > 0.0 ? req.beta2 : req.alpha;
  if (req.example == "4.add" || req.example == "A.29") {
    report.correction = req.correction >= 0
                            ? req.correction
                            : default_correction_order(parse_scheme(req.label, req.alpha));
  }
  for (std::size_t k = 0; k < errors.size(); ++k) {
    ConvergenceRow row{req.grids[k], errors[k], std::nullopt};
    if (k > 0) row.rate = observed_rate(errors[k - 1], errors[k]);
    report.rows.push_back(row);
  }
  return report;
}

void ConvergenceReport::write_csv(std::ostream& os) const {
  os << "# example: " << example << '\n';
  os << "# scheme: " << label << '\n';
  os << "# alpha: " << format_param(alpha) << '\n';
  if (beta2) os << "# beta: " << format_param(*beta2) << '\n';
  os << "# tau_rule: " << tau_rule << '\n';
  if (correction) os << "# correction_order: " << *correction << '\n';
  os << "# norm: " << norm << '\n';
  os << "N,error,rate\n";
  for (const auto& row : rows) {
    os << row.N << ',' << format_double(row.error) << ',';
    if (row.rate) os << format_double(*row.rate);
    os << '\n';
  }
}

}  // namespace qcfd
