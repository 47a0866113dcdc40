#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "qcfd/grunwald.hpp"

namespace qcfd {

/// Quasi-compact stencil
///   sum_o c_o D^a u(x + o h)  ~  sum_p d_p delta_{h,p} u(x),   o, p in {-1, 0, 1},
/// normalized so that sum c = sum d = 1.
struct SchemeSpec {
  std::string label;
  Triple c{0.0, 1.0, 0.0};
  Triple d{0.0, 0.0, 1.0};
  int order = 2;
  bool symmetric_c = false;
};

double beta(double alpha);

/// (lambda_{m,n}, lambda_{n,m}) with lambda_{m,n} = (b - n + 1)/(m - n).
std::pair<double, double> lambda_pair(int m, int n, double b);
/// (xi_{p,q}, xi_{q,p}) with xi_{p,q} = (b + q - 1)/(q - p).
std::pair<double, double> xi_pair(int p, int q, double b);

enum class SecondOrderFamily {
  ThreePoint,  // c = (-b(1-b)/2, 1-b^2, b(1+b)/2), d = (0,0,1)
  TwoPoint,    // lambda_{m,n}, lambda_{n,m} at offsets m-1, n-1; d = (0,0,1)
  ShiftPair,   // xi-weighted pair of two-point stencils on shifts p and q
};

struct SecondOrderParams {
  SecondOrderFamily family = SecondOrderFamily::ThreePoint;
  int p = 0, q = 1;
  int m1 = 1, n1 = 2;
  int m2 = 0, n2 = 1;
};

/// Parameters of catalog scheme `id` (1..10).
SecondOrderParams catalog_params(int id);

SchemeSpec build_second_order(const SecondOrderParams& params, double alpha,
                              std::string label = "");
SchemeSpec build_second_order(int id, double alpha);

constexpr Eigen::Index kMaxSeriesLength = 8;

/// Coefficients e_0..e_{L-1} of
///   E(z) = sum_o c_o e^{oz} - (sum_p d_p e^{pz}) ((1 - e^{-z})/z)^a.
Eigen::VectorXd symbol_series(const SchemeSpec& scheme, double alpha,
                              Eigen::Index L = kMaxSeriesLength);

/// Coefficients a_l(gamma, p) of W(z) = e^{gamma z} - e^{pz} ((1 - e^{-z})/z)^a.
Eigen::VectorXd grunwald_symbol(double gamma, double p, double alpha,
                                Eigen::Index L = kMaxSeriesLength);

/// Eliminates the leading error term of two schemes of equal order.
SchemeSpec combine(const SchemeSpec& i, const SchemeSpec& j, double alpha);

/// First m >= 1 with a non-vanishing symbol coefficient.
int verify_order(const SchemeSpec& scheme, double alpha);

/// Labels: "7", "(1,3)", "(1,2)+(1,8)"; whitespace is ignored.
SchemeSpec parse_scheme(const std::string& label, double alpha);

/// The non-degenerate third-order combinations listed as stable.
const std::vector<std::string>& third_order_labels();

}  // namespace qcfd
