#include "qcfd/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "qcfd/harness.hpp"
#include "qcfd/problem_json.hpp"
#include "qcfd/stability.hpp"

namespace qcfd {
namespace {

std::string fmt(const char* spec, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string triple(const Triple& t) {
  // + 0.0 folds -0 into 0
  return "(" + fmt("%.10g", t[0] + 0.0) + "," + fmt("%.10g", t[1] + 0.0) + "," +
         fmt("%.10g", t[2] + 0.0) + ")";
}

// Writes to `path` when given, otherwise to `fallback`.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ConfigurationError("cannot open '" + path + "' for writing");
  body(file);
}

TimeStepRule default_rule(int order) {
  if (order <= 2) return {TimeStepRule::Kind::H};
  if (order == 3) return {TimeStepRule::Kind::HOver20};
  return {TimeStepRule::Kind::HSquared};
}

std::vector<Eigen::Index> parse_grids(const std::string& text) {
  std::vector<Eigen::Index> grids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (end == item.c_str() || *end != '\0' || v < 2) {
      throw ConfigurationError("bad grid entry '" + item + "'");
    }
    grids.push_back(v);
  }
  if (grids.empty()) throw ConfigurationError("empty grid list");
  return grids;
}

// Step-size tokens for stability sweeps: h^2, h/<k>, <k>h, h, or an absolute value.
double stability_tau(const std::string& text, double h) {
  if (text == "h^2" || text == "h2" || text == "h*h") return h * h;
  if (text.size() > 2 && text.rfind("h/", 0) == 0) return h / std::stod(text.substr(2));
  if (text.size() > 1 && text.back() == 'h') {
    std::size_t used = 0;
    const std::string head = text.substr(0, text.size() - 1);
    const double k = std::stod(head, &used);
    if (used != head.size()) throw ConfigurationError("bad step rule '" + text + "'");
    return k * h;
  }
  return TimeStepRule::parse(text).tau(h);
}

struct SchemeArgs {
  std::string label;
  double alpha = 1.5;
};

void run_scheme(const SchemeArgs& a, std::ostream& out) {
  const SchemeSpec s = parse_scheme(a.label, a.alpha);
  const Eigen::VectorXd e = symbol_series(s, a.alpha);
  out << "label: " << s.label << '\n';
  out << "alpha: " << fmt("%g", a.alpha) << '\n';
  out << "c=" << triple(s.c) << '\n';
  out << "d=" << triple(s.d) << '\n';
  out << "order " << verify_order(s, a.alpha) << '\n';
  out << "symmetric_c: " << (s.symmetric_c ? "yes" : "no") << '\n';
  for (Eigen::Index l = 1; l < e.size(); ++l) {
    out << "e_" << l << " = " << fmt("%.6e", e(l)) << '\n';
  }
}

struct StabilityArgs {
  std::string label;
  double alpha = 1.5;
  Eigen::Index N = 100;
  std::vector<std::string> rules{"h^2", "h", "10h"};
  double K1 = 1.0, K2 = 0.0;
};

void run_stability(const StabilityArgs& a, std::ostream& out) {
  const SchemeSpec s = parse_scheme(a.label, a.alpha);
  const double h = 1.0 / static_cast<double>(a.N);
  std::vector<double> taus;
  for (const auto& r : a.rules) taus.push_back(stability_tau(r, h));
  const auto rows = stability_sweep(s, a.alpha, a.K1, a.K2, a.N, taus);
  out << "label,alpha,N,tau,tau_over_halpha,f_max,rho,iterations,converged,verdict\n";
  bool any_unstable = false, all_stable = true;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    out << r.label << ',' << fmt("%g", r.alpha) << ',' << r.N << ',' << fmt("%.5e", taus[k])
        << ',' << fmt("%.5e", r.tau_over_halpha) << ',' << fmt("%.5e", r.f_max + 0.0) << ','
        << fmt("%.8f", r.rho) << ',' << r.iterations << ',' << (r.converged ? "yes" : "no")
        << ',' << to_string(r.verdict) << '\n';
    any_unstable = any_unstable || r.verdict == Verdict::Unstable;
    all_stable = all_stable && r.verdict == Verdict::Stable;
  }
  const Verdict overall =
      any_unstable ? Verdict::Unstable : (all_stable ? Verdict::Stable : Verdict::Indeterminate);
  out << "verdict: " << to_string(overall) << '\n';
}

struct ConvergeArgs {
  std::string example, label, grids, rule, out;
  double alpha = 1.5, beta = 0.0;
  int correction = -1;
  bool serial = false;
};

void run_converge(const ConvergeArgs& a, std::ostream& out) {
  ConvergenceRequest req;
  req.example = a.example;
  req.label = a.label;
  req.alpha = a.alpha;
  req.beta2 = a.beta;
  req.correction = a.correction;
  req.concurrent = !a.serial;
  const bool plane = a.example == "4.3";
  req.grids = parse_grids(a.grids.empty() ? (plane ? "8,16,32,64" : "8,16,32,64,128") : a.grids);
  req.rule = a.rule.empty() ? default_rule(parse_scheme(a.label, a.alpha).order)
                            : TimeStepRule::parse(a.rule);
  const ConvergenceReport report = run_convergence(req);
  emit(a.out, out, [&](std::ostream& os) { report.write_csv(os); });
}

struct SolveArgs {
  std::string example, problem, label, rule, out;
  double alpha = 1.5, beta = 0.0;
  Eigen::Index N = 32;
  int correction = -1;
};

void write_nodes(std::ostream& os, const Eigen::VectorXd& x, const Eigen::VectorXd& u) {
  os << "x,value\n";
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    os << fmt("%.10e", x(i)) << ',' << fmt("%.10e", u(i)) << '\n';
  }
}

void run_solve(const SolveArgs& a, std::ostream& out) {
  if (a.example.empty() == a.problem.empty()) {
    throw ConfigurationError("solve needs exactly one of --example or --problem");
  }
  if (!a.problem.empty()) {
    std::ifstream in(a.problem);
    if (!in) throw ConfigurationError("cannot open '" + a.problem + "'");
    const ProblemFile file = load_problem_json(in);
    const Problem1D p = to_problem(file.problem);
    const SchemeSpec s = parse_scheme(a.label, p.alpha);
    const TimeStepRule rule = a.rule.empty() ? default_rule(s.order) : TimeStepRule::parse(a.rule);
    const int n = a.correction >= 0 ? a.correction : file.correction;
    const SolveResult1D r = n >= 0 ? nonhomogeneous_solve(p, s, a.N, rule, n)
                                   : solve(p, s, a.N, rule);
    emit(a.out, out, [&](std::ostream& os) { write_nodes(os, r.x, r.u); });
    return;
  }

  const BuiltinProblem problem = builtin_problem(a.example, a.alpha, a.beta);
  const SchemeSpec s = parse_scheme(a.label, a.alpha);
  const TimeStepRule rule = a.rule.empty() ? default_rule(s.order) : TimeStepRule::parse(a.rule);
  const double h = 1.0 / static_cast<double>(a.N);
  if (const auto* p2 = std::get_if<Problem2D>(&problem)) {
    const SolveResult2D r = adi_solve(*p2, a.label, a.N, rule);
    emit(a.out, out, [&](std::ostream& os) {
      os << "x,y,value\n";
      for (Eigen::Index i = 0; i <= a.N; ++i) {
        for (Eigen::Index j = 0; j <= a.N; ++j) {
          os << fmt("%.10e", i * h) << ',' << fmt("%.10e", j * h) << ','
             << fmt("%.10e", r.u(i, j)) << '\n';
        }
      }
    });
    return;
  }
  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(a.N + 1, 0.0, 1.0);
  if (const auto* ps = std::get_if<SteadyProblem>(&problem)) {
    SteadyProblem sp = *ps;
    sp.correction_order = a.correction;
    const Eigen::VectorXd u = steady_solve(sp, s, a.N);
    emit(a.out, out, [&](std::ostream& os) { write_nodes(os, x, u); });
    return;
  }
  const auto& p1 = std::get<Problem1D>(problem);
  const SolveResult1D r = a.example == "4.add" ? nonhomogeneous_solve(p1, s, a.N, rule, a.correction)
                                               : solve(p1, s, a.N, rule);
  emit(a.out, out, [&](std::ostream& os) { write_nodes(os, r.x, r.u); });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-compact finite differences for space-fractional diffusion", "qcfd"};
  app.require_subcommand(1);

  SchemeArgs sa;
  auto* scheme = app.add_subcommand("scheme", "Print a scheme's stencils, order and symbol series");
  scheme->add_option("--label", sa.label, "Scheme label, e.g. 4, (1,3), (1,2)+(1,8)")->required();
  scheme->add_option("--alpha", sa.alpha, "Fractional order in (1,2]")->required();

  StabilityArgs st;
  auto* stab = app.add_subcommand("stability", "Spectral radius of the CN iteration matrix");
  stab->add_option("--label", st.label, "Scheme label")->required();
  stab->add_option("--alpha", st.alpha, "Fractional order")->required();
  stab->add_option("--n", st.N, "Grid size N (h = 1/N)")->required();
  stab->add_option("--tau-rule", st.rules, "Step sizes: h^2, h, 10h, h/20 or a number")
      ->delimiter(',')
      ->capture_default_str();
  stab->add_option("--k1", st.K1, "Left diffusion coefficient")->capture_default_str();
  stab->add_option("--k2", st.K2, "Right diffusion coefficient")->capture_default_str();

  ConvergeArgs ca;
  auto* conv = app.add_subcommand("converge", "Convergence table for a built-in example");
  conv->add_option("--example", ca.example, "4.1, 4.2, 4.add, 4.3 or A.29")->required();
  conv->add_option("--label", ca.label, "Scheme label")->required();
  conv->add_option("--alpha", ca.alpha, "Fractional order")->required();
  conv->add_option("--beta", ca.beta, "y-order for 4.3 (defaults to alpha)");
  conv->add_option("--grids", ca.grids, "Doubling grid list, e.g. 8,16,32,64,128");
  conv->add_option("--tau-rule", ca.rule, "h, h/20, h^2 or a fixed step (default by order)");
  conv->add_option("--correction", ca.correction, "Boundary-correction order for 4.add/A.29");
  conv->add_option("--out", ca.out, "CSV output path (stdout when omitted)");
  conv->add_flag("--serial", ca.serial, "Run grids one after another");

  SolveArgs so;
  auto* solv = app.add_subcommand("solve", "Final-time nodal values as CSV");
  solv->add_option("--example", so.example, "Built-in example id");
  solv->add_option("--problem", so.problem, "JSON problem file (docs/problem_schema.md)");
  solv->add_option("--label", so.label, "Scheme label")->required();
  solv->add_option("--alpha", so.alpha, "Fractional order (built-in examples)");
  solv->add_option("--beta", so.beta, "y-order for 4.3");
  solv->add_option("--n", so.N, "Grid size N")->capture_default_str();
  solv->add_option("--tau-rule", so.rule, "h, h/20, h^2 or a fixed step (default by order)");
  solv->add_option("--correction", so.correction, "Boundary-correction order");
  solv->add_option("--out", so.out, "CSV output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*scheme) run_scheme(sa, out);
    if (*stab) run_stability(st, out);
    if (*conv) run_converge(ca, out);
    if (*solv) run_solve(so, out);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "configuration error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace qcfd
