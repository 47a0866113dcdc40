#include "qcfd/schemes.hpp"

#include <cctype>
#include <cmath>

#include "qcfd/power_series.hpp"

namespace qcfd {
namespace {

constexpr double kZeroTol = 1e-10;

void add_at(Triple& t, int offset, double value) {
  if (offset < -1 || offset > 1) {
    throw ConfigurationError("scheme stencil offset " + std::to_string(offset) +
                             " is not quasi-compact");
  }
  t[offset + 1] += value;
}

bool is_symmetric(const Triple& c) { return std::abs(c[0] - c[2]) <= 1e-12; }

SchemeSpec finish(std::string label, const Triple& c, const Triple& d, int order) {
  SchemeSpec s;
  s.label = std::move(label);
  s.c = c;
  s.d = d;
  s.order = order;
  s.symmetric_c = is_symmetric(c);
  return s;
}

// Recursive-descent parser for  expr := primary ('+' primary)? ;  primary := INT | '(' expr ',' expr ')'.
class LabelParser {
 public:
  LabelParser(const std::string& text, double alpha) : alpha_(alpha) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  SchemeSpec parse() {
    SchemeSpec out = expr();
    if (pos_ != s_.size()) fail();
    return out;
  }

 private:
  SchemeSpec expr() {
    SchemeSpec a = primary();
    if (peek() == '+') {
      ++pos_;
      SchemeSpec b = primary();
      return combine(a, b, alpha_);
    }
    return a;
  }

  SchemeSpec primary() {
    if (peek() == '(') {
      ++pos_;
      SchemeSpec a = expr();
      expect(',');
      SchemeSpec b = expr();
      expect(')');
      return combine(a, b, alpha_);
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 2) fail();
    return build_second_order(std::stoi(s_.substr(start, pos_ - start)), alpha_);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char ch) {
    if (peek() != ch) fail();
    ++pos_;
  }
  [[noreturn]] void fail() const {
    throw ConfigurationError("malformed scheme label '" + s_ + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
  double alpha_;
};

bool is_plain_id(const std::string& label) {
  return !label.empty() &&
         label.find_first_not_of("0123456789") == std::string::npos;
}

}  // namespace

double beta(double alpha) {
  require_fractional_order(alpha, "beta");
  return 1.0 - alpha / 2.0;
}

std::pair<double, double> lambda_pair(int m, int n, double b) {
  if (m == n) throw DomainError("lambda_pair: indices must differ");
  return {(b - n + 1.0) / (m - n), (b - m + 1.0) / (n - m)};
}

std::pair<double, double> xi_pair(int p, int q, double b) {
  if (p == q) throw DomainError("xi_pair: shifts must differ");
  return {(b + q - 1.0) / (q - p), (b + p - 1.0) / (p - q)};
}

SecondOrderParams catalog_params(int id) {
  using F = SecondOrderFamily;
  switch (id) {
    case 1: return {F::ThreePoint};
    case 2: return {F::TwoPoint, 0, 1, 1, 2};
    case 3: return {F::TwoPoint, 0, 1, 0, 1};
    case 4: return {F::ShiftPair, 0, 1, 1, 2, 0, 1};
    case 5: return {F::ShiftPair, 0, 1, 1, 2, 1, 2};
    case 6: return {F::ShiftPair, 0, 1, 1, 3, 0, 1};
    case 7: return {F::ShiftPair, 0, 1, 2, 3, 0, 1};
    case 8: return {F::ShiftPair, -1, 1, 2, 3, 0, 1};
    case 9: return {F::ShiftPair, -1, 1, 2, 4, 0, 1};
    case 10: return {F::ShiftPair, -1, 1, 3, 4, 0, 1};
    default: throw ConfigurationError("scheme id must be in 1..10, got " + std::to_string(id));
  }
}

SchemeSpec build_second_order(const SecondOrderParams& prm, double alpha, std::string label) {
  const double b = beta(alpha);
  Triple c{0.0, 0.0, 0.0};
  Triple d{0.0, 0.0, 0.0};
  switch (prm.family) {
    case SecondOrderFamily::ThreePoint:
      c = {-b * (1.0 - b) / 2.0, 1.0 - b * b, b * (1.0 + b) / 2.0};
      d = {0.0, 0.0, 1.0};
      break;
    case SecondOrderFamily::TwoPoint: {
      const auto [lmn, lnm] = lambda_pair(prm.m1, prm.n1, b);
      add_at(c, prm.m1 - 1, lmn);
      add_at(c, prm.n1 - 1, lnm);
      d = {0.0, 0.0, 1.0};
      break;
    }
    case SecondOrderFamily::ShiftPair: {
      if (!(prm.m1 < prm.n1 && prm.m2 < prm.n2 && prm.p < prm.q)) {
        throw ConfigurationError("shift-pair parameters need m1<n1, m2<n2, p<q");
      }
      const auto [xpq, xqp] = xi_pair(prm.p, prm.q, b);
      const auto [l1a, l1b] = lambda_pair(prm.m1, prm.n1, b);
      const auto [l2a, l2b] = lambda_pair(prm.m2, prm.n2, b);
      add_at(c, prm.p + prm.m1 - 2, xpq * l1a);
      add_at(c, prm.p + prm.n1 - 2, xpq * l1b);
      add_at(c, prm.q + prm.m2 - 2, xqp * l2a);
      add_at(c, prm.q + prm.n2 - 2, xqp * l2b);
      add_at(d, prm.p, xpq);
      add_at(d, prm.q, xqp);
      break;
    }
  }
  return finish(std::move(label), c, d, 2);
}

SchemeSpec build_second_order(int id, double alpha) {
  return build_second_order(catalog_params(id), alpha, std::to_string(id));
}

Eigen::VectorXd symbol_series(const SchemeSpec& scheme, double alpha, Eigen::Index L) {
  if (L < 1 || L > kMaxSeriesLength) {
    throw ConfigurationError("symbol_series: length must be in 1..8");
  }
  using S = TruncatedSeries<double>;
  const S g_alpha = pow(S::grunwald_kernel(L), alpha);
  S compact(L), shifted(L);
  for (int o = -1; o <= 1; ++o) {
    compact += scheme.c[o + 1] * S::exponential(L, o);
    shifted += scheme.d[o + 1] * S::exponential(L, o);
  }
  return (compact - shifted * g_alpha).coeffs();
}

Eigen::VectorXd grunwald_symbol(double gamma, double p, double alpha, Eigen::Index L) {
  if (L < 1 || L > kMaxSeriesLength) {
    throw ConfigurationError("grunwald_symbol: length must be in 1..8");
  }
  using S = TruncatedSeries<double>;
  return (S::exponential(L, gamma) -
          S::exponential(L, p) * pow(S::grunwald_kernel(L), alpha))
      .coeffs();
}

SchemeSpec combine(const SchemeSpec& i, const SchemeSpec& j, double alpha) {
  if (i.order != j.order) {
    throw ConfigurationError("combine: schemes '" + i.label + "' and '" + j.label +
                             "' have different orders");
  }
  const int l = i.order;
  if (l + 1 >= kMaxSeriesLength) throw ConfigurationError("combine: order too high");
  const double ei = symbol_series(i, alpha)(l);
  const double ej = symbol_series(j, alpha)(l);
  Triple c{}, d{};
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    c[k] = ej * i.c[k] - ei * j.c[k];
    d[k] = ej * i.d[k] - ei * j.d[k];
    sum += c[k];
  }
  std::string label = is_plain_id(i.label) && is_plain_id(j.label)
                          ? "(" + i.label + "," + j.label + ")"
                          : i.label + "+" + j.label;
  if (std::abs(sum) < 1e-12) {
    throw ConfigurationError("combine: degenerate combination " + label);
  }
  for (int k = 0; k < 3; ++k) {
    c[k] /= sum;
    d[k] /= sum;
  }
  return finish(std::move(label), c, d, l + 1);
}

int verify_order(const SchemeSpec& scheme, double alpha) {
  const Eigen::VectorXd e = symbol_series(scheme, alpha);
  for (Eigen::Index m = 1; m < e.size(); ++m) {
    // Coefficients between the two thresholds are reported as nonzero (conservative).
    if (std::abs(e(m)) >= kZeroTol) return static_cast<int>(m);
  }
  return static_cast<int>(e.size());
}

SchemeSpec parse_scheme(const std::string& label, double alpha) {
  return LabelParser(label, alpha).parse();
}

const std::vector<std::string>& third_order_labels() {
  // (2,5) is omitted: ids 2 and 5 share the same leading error term, so the
  // combination annihilates both sums and cannot be normalized.
  static const std::vector<std::string> labels = {
      "(1,2)", "(1,3)", "(1,4)", "(2,4)", "(1,5)", "(3,5)", "(4,5)",
      "(1,6)", "(2,6)", "(1,7)", "(2,7)", "(3,7)", "(1,8)", "(2,8)",
      "(3,8)", "(5,8)", "(1,9)", "(2,9)", "(3,9)", "(5,9)", "(1,10)",
      "(2,10)", "(3,10)", "(5,10)"};
  return labels;
}

}  // namespace qcfd
