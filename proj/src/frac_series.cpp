#include "arps/frac_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "arps/special.hpp"

namespace arps {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("FracSeries: alpha must lie in (0, 1], got " +
                                std::to_string(alpha));
  }
}

}  // namespace

FracSeries::FracSeries(double alpha, std::vector<HypExpr> coeffs)
    : alpha_(alpha), coeffs_(std::move(coeffs)) {
  check_alpha(alpha_);
  if (coeffs_.empty()) throw std::invalid_argument("FracSeries: needs at least one coefficient");
}

FracSeries FracSeries::zero(double alpha, int order) {
  if (order < 0) throw std::invalid_argument("FracSeries: negative order");
  return FracSeries(alpha, std::vector<HypExpr>(static_cast<std::size_t>(order) + 1));
}

FracSeries FracSeries::constant(double alpha, int order, HypExpr value) {
  FracSeries s = zero(alpha, order);
  s.coeffs_[0] = std::move(value);
  return s;
}

HypExpr FracSeries::monomial_coefficient(int n) const {
  return (*this)[n] * (1.0 / special::gamma(n * alpha_ + 1.0));
}

FracSeries FracSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw std::out_of_range("FracSeries::truncated: order out of range");
  }
  return FracSeries(alpha_, {coeffs_.begin(), coeffs_.begin() + order + 1});
}

FracSeries FracSeries::resized(int order) const {
  if (order < 0) throw std::invalid_argument("FracSeries::resized: negative order");
  std::vector<HypExpr> c = coeffs_;
  c.resize(static_cast<std::size_t>(order) + 1);
  return FracSeries(alpha_, std::move(c));
}

void FracSeries::check_compatible(const FracSeries& rhs, const char* op) const {
  if (alpha_ != rhs.alpha_) {
    throw std::invalid_argument(std::string(op) + ": alpha mismatch");
  }
}

FracSeries& FracSeries::operator+=(const FracSeries& rhs) {
  check_compatible(rhs, "FracSeries +");
  const int order = std::min(this->order(), rhs.order());
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

FracSeries& FracSeries::operator-=(const FracSeries& rhs) {
  check_compatible(rhs, "FracSeries -");
  const int order = std::min(this->order(), rhs.order());
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

FracSeries& FracSeries::operator*=(double scale) {
  for (HypExpr& c : coeffs_) c *= scale;
  return *this;
}

double convolution_weight(double alpha, int n, int m) {
  if (m < 0 || m > n) throw std::out_of_range("convolution_weight: index out of range");
  if (m == 0 || m == n) return 1.0;
  const double ratio = special::gamma_ratio(n * alpha + 1.0, m * alpha + 1.0);
  return ratio / special::gamma((n - m) * alpha + 1.0);
}

FracSeries series_caputo(const FracSeries& s) {
  if (s.order() < 1) {
    throw std::domain_error("series_caputo: order-0 series has no representable derivative");
  }
  return FracSeries(s.alpha(), {s.coeffs().begin() + 1, s.coeffs().end()});
}

FracSeries series_rl_integral(const FracSeries& s) {
  std::vector<HypExpr> c;
  c.reserve(s.coeffs().size() + 1);
  c.emplace_back();
  c.insert(c.end(), s.coeffs().begin(), s.coeffs().end());
  return FracSeries(s.alpha(), std::move(c));
}

FracSeries series_mul(const FracSeries& a, const FracSeries& b) {
  if (a.alpha() != b.alpha()) throw std::invalid_argument("series_mul: alpha mismatch");
  const double alpha = a.alpha();
  const int order = std::min(a.order(), b.order());
  std::vector<HypExpr> out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    HypExpr acc;
    for (int m = 0; m <= n; ++m) {
      if (a[m].is_zero() || b[n - m].is_zero()) continue;
      acc += convolution_weight(alpha, n, m) * (a[m] * b[n - m]);
    }
    out[n] = std::move(acc);
  }
  return FracSeries(alpha, std::move(out));
}

FracSeries series_pow(const FracSeries& s, int power) {
  if (power < 2) throw std::invalid_argument("series_pow: exponent must be >= 2");
  FracSeries result = s;
  for (int p = 1; p < power; ++p) result = series_mul(result, s);
  return result;
}

FracSeries series_spatial_diff(const FracSeries& s, int order) {
  if (order < 1) throw std::invalid_argument("series_spatial_diff: order must be >= 1");
  std::vector<HypExpr> c;
  c.reserve(s.coeffs().size());
  for (const HypExpr& e : s.coeffs()) c.push_back(e.derivative(order));
  return FracSeries(s.alpha(), std::move(c));
}

double series_eval(const FracSeries& s, double x, double t) {
  if (t < 0.0) throw std::domain_error("series_eval: t must be nonnegative");
  double sum = 0.0;
  for (int n = 0; n <= s.order(); ++n) {
    if (s[n].is_zero()) continue;
    sum += s[n](x) * special::fractional_monomial(t, n * s.alpha());
  }
  return sum;
}

double series_distance(const FracSeries& a, const FracSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series_distance: order mismatch");
  double d = 0.0;
  for (int n = 0; n <= a.order(); ++n) d = std::max(d, hyp_distance(a[n], b[n]));
  return d;
}

}  // namespace arps
