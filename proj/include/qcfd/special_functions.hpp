#pragma once

namespace qcfd {

/// Gamma function. Lanczos (g = 7, 9 terms) with reflection for x < 1/2.
/// Throws DomainError at non-positive integers.
double gamma(double x);

/// 1/Gamma(x); returns exactly 0 at the poles of Gamma.
double rgamma(double x);

/// sin(pi x) with the argument reduced exactly, so zeros land on integers.
double sin_pi(double x);

enum class Side { Left, Right };

/// x^s anchored at the left end (Side::Left) or (1-x)^s anchored at the right end of [0,1].
struct MonomialDerivSpec {
  double exponent = 0.0;
  double order = 2.0;
  Side side = Side::Left;
};

/// Riemann-Liouville derivative of order `order` of a monomial on [0,1]:
///   left:  0D_x^a x^s       = Gamma(s+1)/Gamma(s+1-a) x^(s-a)
///   right: xD_1^a (1-x)^s   = Gamma(s+1)/Gamma(s+1-a) (1-x)^(s-a)
/// Evaluating at the anchored endpoint when s - a < 0 throws DomainError
/// unless the coefficient vanishes identically.
double rl_monomial_deriv(const MonomialDerivSpec& spec, double x);

}  // namespace qcfd
