#include "qcfd/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qcfd/errors.hpp"

namespace qcfd {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Valid for x >= 1/2.
double lanczos_gamma(double x) {
  const double z = x - 1.0;
  double series = kLanczosCoeffs[0];
  for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
    series += kLanczosCoeffs[k] / (z + static_cast<double>(k));
  }
  const double t = z + kLanczosG + 0.5;
  // t^(z+0.5) e^-t split in two halves to postpone overflow near x ~ 170.
  const double half_pow = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_pow * (half_pow * std::exp(-t)) * series;
}

}  // namespace

double sin_pi(double x) {
  // x - 2*round(x/2) is exact in binary floating point.
  double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  // Fold to [-1/2, 1/2] where sin is accurate.
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

double gamma(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) {
    throw DomainError("gamma: pole at x = " + std::to_string(x));
  }
  if (x < 0.5) {
    return std::numbers::pi / (sin_pi(x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x < 0.5) {
    return sin_pi(x) * lanczos_gamma(1.0 - x) / std::numbers::pi;
  }
  return 1.0 / lanczos_gamma(x);
}

double rl_monomial_deriv(const MonomialDerivSpec& spec, double x) {
  const double s = spec.exponent;
  const double a = spec.order;
  const double xi = spec.side == Side::Left ? x : 1.0 - x;
  const double coeff = gamma(s + 1.0) * rgamma(s + 1.0 - a);
  if (coeff == 0.0) return 0.0;
  if (s - a < 0.0 && xi <= 0.0) {
    throw DomainError("rl_monomial_deriv: singular endpoint for exponent " + std::to_string(s) +
                      " and order " + std::to_string(a));
  }
  if (xi < 0.0) {
    throw DomainError("rl_monomial_deriv: evaluation point outside [0,1]");
  }
  return coeff * std::pow(xi, s - a);
}

}  // namespace qcfd
