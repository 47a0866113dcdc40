#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "qcfd/errors.hpp"

namespace qcfd {

/// Formal power series in z truncated after z^(L-1). Coefficient k is the z^k term.
template <typename Scalar>
class TruncatedSeries {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit TruncatedSeries(Eigen::Index length) : c_(Coeffs::Zero(length)) {}
  explicit TruncatedSeries(Coeffs coeffs) : c_(std::move(coeffs)) {}

  static TruncatedSeries constant(Eigen::Index length, Scalar value) {
    TruncatedSeries s(length);
    s.c_(0) = value;
    return s;
  }

  /// e^{shift z} = sum shift^k z^k / k!
  static TruncatedSeries exponential(Eigen::Index length, Scalar shift) {
    TruncatedSeries s(length);
    Scalar term(1);
    for (Eigen::Index k = 0; k < length; ++k) {
      s.c_(k) = term;
      term *= shift / Scalar(k + 1);
    }
    return s;
  }

  /// (1 - e^{-z}) / z = sum (-1)^k z^k / (k+1)!
  static TruncatedSeries grunwald_kernel(Eigen::Index length) {
    TruncatedSeries s(length);
    Scalar fact(1);
    for (Eigen::Index k = 0; k < length; ++k) {
      fact *= Scalar(k + 1);
      s.c_(k) = (k % 2 == 0 ? Scalar(1) : Scalar(-1)) / fact;
    }
    return s;
  }

  Eigen::Index length() const { return c_.size(); }
  const Coeffs& coeffs() const { return c_; }
  Scalar operator[](Eigen::Index k) const { return c_(k); }
  Scalar& operator[](Eigen::Index k) { return c_(k); }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { c_ += o.c_; return *this; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { c_ -= o.c_; return *this; }
  TruncatedSeries& operator*=(Scalar a) { c_ *= a; return *this; }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(Scalar s, TruncatedSeries a) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const Eigen::Index n = a.length();
    TruncatedSeries out(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      Scalar acc(0);
      for (Eigen::Index j = 0; j <= k; ++j) acc += a.c_(j) * b.c_(k - j);
      out.c_(k) = acc;
    }
    return out;
  }

 private:
  Coeffs c_;
};

/// exp of a series, via E' = s' E.
template <typename Scalar>
TruncatedSeries<Scalar> exp(const TruncatedSeries<Scalar>& s) {
  const Eigen::Index n = s.length();
  TruncatedSeries<Scalar> e(n);
  e[0] = Scalar(1);
  for (Eigen::Index k = 1; k < n; ++k) {
    Scalar acc(0);
    for (Eigen::Index j = 1; j <= k; ++j) acc += Scalar(j) * s[j] * e[k - j];
    e[k] = acc / Scalar(k);
  }
  return std::exp(s[0]) * e;
}

/// log of a series with positive constant term, via L' = s'/s.
template <typename Scalar>
TruncatedSeries<Scalar> log(const TruncatedSeries<Scalar>& s) {
  if (!(s[0] > Scalar(0))) throw DomainError("series log: constant term must be positive");
  const Eigen::Index n = s.length();
  TruncatedSeries<Scalar> u = (Scalar(1) / s[0]) * s;
  TruncatedSeries<Scalar> out(n);
  out[0] = std::log(s[0]);
  for (Eigen::Index k = 1; k < n; ++k) {
    Scalar acc = u[k];
    for (Eigen::Index j = 1; j < k; ++j) acc -= Scalar(j) * out[j] * u[k - j] / Scalar(k);
    out[k] = acc;
  }
  return out;
}

template <typename Scalar>
TruncatedSeries<Scalar> pow(const TruncatedSeries<Scalar>& s, Scalar exponent) {
  return exp(exponent * log(s));
}

}  // namespace qcfd
