#include "arps/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace arps::special {

namespace {

constexpr double kIntegerTol = 1e-12;
constexpr double kGammaOverflow = 171.6;
constexpr double kDirectGammaLimit = 170.0;

bool near_integer(double x, double& rounded) {
  rounded = std::round(x);
  return std::abs(x - rounded) <= kIntegerTol;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) {
    throw std::domain_error(std::string(what) + ": argument must be positive, got " +
                            std::to_string(x));
  }
}

}  // namespace

double gamma(double x) {
  require_positive(x, "gamma");
  if (x > kGammaOverflow) {
    throw std::overflow_error("gamma: argument " + std::to_string(x) + " overflows double");
  }

  double n = 0.0;
  if (near_integer(x, n) && n >= 1.0) {
    double result = 1.0;
    for (double k = 2.0; k < n; k += 1.0) result *= k;
    return result;
  }
  if (near_integer(x - 0.5, n) && n >= 0.0) {
    // Gamma(n + 1/2) = sqrt(pi) * prod_{k<n} (k + 1/2)
    double result = std::sqrt(std::numbers::pi);
    for (double k = 0.0; k < n; k += 1.0) result *= k + 0.5;
    return result;
  }
  return std::tgamma(x);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x <= kDirectGammaLimit) {
    double n = 0.0;
    if (near_integer(x, n) || near_integer(x - 0.5, n)) return std::log(gamma(x));
  }
  return std::lgamma(x);
}

double gamma_ratio(double p, double q) {
  require_positive(p, "gamma_ratio");
  require_positive(q, "gamma_ratio");

  double shift = 0.0;
  if (near_integer(p - q, shift) && std::abs(shift) <= 64.0) {
    // Gamma(q + d) / Gamma(q) = q (q + 1) ... (q + d - 1)
    const double lo = shift >= 0.0 ? q : p;
    const int steps = static_cast<int>(std::abs(shift));
    double prod = 1.0;
    for (int k = 0; k < steps; ++k) prod *= lo + k;
    return shift >= 0.0 ? prod : 1.0 / prod;
  }
  if (p <= kDirectGammaLimit && q <= kDirectGammaLimit) return gamma(p) / gamma(q);

  const double value = std::exp(log_gamma(p) - log_gamma(q));
  if (!std::isfinite(value)) {
    throw std::overflow_error("gamma_ratio: result overflows double");
  }
  return value;
}

double fractional_monomial(double t, double p) {
  if (t < 0.0) throw std::domain_error("fractional_monomial: t must be nonnegative");
  if (p < 0.0) throw std::domain_error("fractional_monomial: exponent must be nonnegative");
  if (p == 0.0) return 1.0;
  if (t == 0.0) return 0.0;
  if (p + 1.0 <= kDirectGammaLimit) return std::pow(t, p) / gamma(p + 1.0);
  return std::exp(p * std::log(t) - log_gamma(p + 1.0));
}

namespace {

double parity_series(double alpha, double a, double t, int terms, int parity) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("fractional series: alpha must lie in (0, 1]");
  }
  if (terms < 0) throw std::invalid_argument("fractional series: negative term count");
  double sum = 0.0;
  for (int n = 0; n <= terms; ++n) {
    const int power = 2 * n + parity;
    sum += std::pow(a, power) * fractional_monomial(t, power * alpha);
  }
  return sum;
}

}  // namespace

double frac_cosh_series(double alpha, double a, double t, int terms) {
  return parity_series(alpha, a, t, terms, 0);
}

double frac_sinh_series(double alpha, double a, double t, int terms) {
  return parity_series(alpha, a, t, terms, 1);
}

}  // namespace arps::special
