#pragma once

#include <vector>

#include "arps/hypexpr.hpp"

namespace arps {

/// Truncated fractional power series in t^alpha with spatial coefficients:
///
///   y(x, t) = sum_{n=0}^{K} c_n(x) t^{n alpha} / Gamma(n alpha + 1)
///
/// c_n is the sequential Caputo derivative D^{n alpha} y(x, 0), so Caputo
/// differentiation is an index shift.
class FracSeries {
 public:
  FracSeries(double alpha, std::vector<HypExpr> coeffs);

  /// Zero series of the given order.
  static FracSeries zero(double alpha, int order);
  /// Series whose only nonzero coefficient is c_0 = value.
  static FracSeries constant(double alpha, int order, HypExpr value);

  double alpha() const { return alpha_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<HypExpr>& coeffs() const { return coeffs_; }
  const HypExpr& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  /// Coefficient in the monomial basis t^{n alpha}: c_n / Gamma(n alpha + 1).
  HypExpr monomial_coefficient(int n) const;

  /// Keep c_0 .. c_order (order must not exceed the current order).
  FracSeries truncated(int order) const;
  /// Zero-pad or truncate to exactly the given order.
  FracSeries resized(int order) const;

  FracSeries& operator+=(const FracSeries& rhs);
  FracSeries& operator-=(const FracSeries& rhs);
  FracSeries& operator*=(double scale);

  friend FracSeries operator+(FracSeries a, const FracSeries& b) { return a += b; }
  friend FracSeries operator-(FracSeries a, const FracSeries& b) { return a -= b; }
  friend FracSeries operator*(FracSeries a, double s) { return a *= s; }
  friend FracSeries operator*(double s, FracSeries a) { return a *= s; }

 private:
  void check_compatible(const FracSeries& rhs, const char* op) const;

  double alpha_;
  std::vector<HypExpr> coeffs_;
};

/// Gamma(n alpha + 1) / (Gamma(m alpha + 1) Gamma((n - m) alpha + 1)).
/// Reduces to the binomial coefficient at alpha = 1.
double convolution_weight(double alpha, int n, int m);

/// D_t^alpha: drops c_0 and shifts the remaining coefficients down.
/// Throws std::domain_error for an order-0 series.
FracSeries series_caputo(const FracSeries& s);

/// Riemann-Liouville integral J_t^alpha: shifts coefficients up, c_0 = 0.
FracSeries series_rl_integral(const FracSeries& s);

/// Product truncated to min(order1, order2). Throws std::invalid_argument on
/// mismatched alpha.
FracSeries series_mul(const FracSeries& a, const FracSeries& b);

/// Repeated product; the order is preserved.
FracSeries series_pow(const FracSeries& s, int power);

/// d^m/dx^m applied to every coefficient.
FracSeries series_spatial_diff(const FracSeries& s, int order);

/// Pointwise value at (x, t), t >= 0.
double series_eval(const FracSeries& s, double x, double t);

/// Largest coefficient distance between two series of the same order.
double series_distance(const FracSeries& a, const FracSeries& b);

}  // namespace arps
