#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arps/frac_series.hpp"
#include "arps/hypexpr.hpp"

namespace arps {

/// Formal order-two image  G2[y](s) = sum_n h_n(x) / s^{n alpha + 1}.
///
/// Index n always labels the power s^{-(n alpha + 1)}, so multiplying by
/// s^{-m alpha} is a shift by m. The order-one image
/// G1 = sum h_n / ((n alpha + 1) s^{n alpha}) is a derived view.
class AraSeries {
 public:
  AraSeries(double alpha, std::vector<HypExpr> coeffs);

  static AraSeries zero(double alpha, int order);
  /// Single term expr / s^{index alpha + 1}.
  static AraSeries monomial(double alpha, int order, int index, HypExpr expr);

  double alpha() const { return alpha_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<HypExpr>& coeffs() const { return coeffs_; }
  const HypExpr& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  /// Multiply by s^{-m alpha}; the order grows by m.
  AraSeries shifted(int m) const;
  /// G1 / s written in the same basis: coefficient h_n / (n alpha + 1).
  AraSeries order_one_over_s() const;
  AraSeries resized(int order) const;

  /// Termwise evaluation of the truncated images at (x, s).
  double eval_order_two(double x, double s) const;
  double eval_order_one(double x, double s) const;

  AraSeries& operator+=(const AraSeries& rhs);
  AraSeries& operator-=(const AraSeries& rhs);
  AraSeries& operator*=(double scale);

  friend AraSeries operator+(AraSeries a, const AraSeries& b) { return a += b; }
  friend AraSeries operator-(AraSeries a, const AraSeries& b) { return a -= b; }
  friend AraSeries operator*(AraSeries a, double s) { return a *= s; }
  friend AraSeries operator*(double s, AraSeries a) { return a *= s; }

 private:
  void combine(const AraSeries& rhs, double sign);

  double alpha_;
  std::vector<HypExpr> coeffs_;
};

/// h_n = (n alpha + 1) c_n.
AraSeries to_ara(const FracSeries& s);
/// c_n = h_n / (n alpha + 1).
FracSeries from_ara(const AraSeries& a);

struct AraNumericOptions {
  double abs_tol = 1e-10;
  /// Truncation horizon in t. Zero picks one from the integrand decay.
  double horizon = 0.0;
  int max_levels = 15;
};

struct AraNumericResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double tail_bound = 0.0;
  bool tail_warning = false;
};

/// s * int_0^T t^{n-1} e^{-s t} f(t) dt by double-exponential quadrature.
/// Throws QuadratureError on non-convergence.
AraNumericResult ara_numeric(const std::function<double(double)>& f, int n, double s,
                             const AraNumericOptions& opts = {});

/// Gamma(p + n) / s^{p + n - 1}, the image of t^p.
double ara_monomial(double p, int n, double s);

/// Inputs for the numerical property checks. When caputo is empty the
/// Caputo derivative of f is taken numerically.
struct PropertyCase {
  std::function<double(double)> f;
  std::function<double(double)> g;
  double a = 2.0;
  double b = 3.0;
  double alpha = 0.5;
  std::function<double(double)> caputo;
};

struct PropertyReport {
  int id = 0;
  std::string statement;
  std::vector<double> s_values;
  std::vector<double> lhs;
  std::vector<double> rhs;
  std::optional<double> extrapolated;  // limit properties only
  double max_discrepancy = 0.0;
};

/// Evaluates both sides of transform property `id` (1..7) at the sampled s.
/// Limit properties (2, 7) default to s in {10, 20, 40, 80} and extrapolate
/// to s = infinity; the others default to {2, 4, 8}.
PropertyReport verify_property(int id, const PropertyCase& c,
                               std::vector<double> samples = {});

}  // namespace arps
