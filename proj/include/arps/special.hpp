#pragma once

// Gamma-function helpers and the Mittag-Leffler-type partial sums used by
// the closed-form solutions.

namespace arps::special {

/// Gamma function for x > 0.
///
/// Integer and half-integer arguments (within 1e-12) are evaluated by exact
/// recurrences so that factorial-valued weights are reproducible bit for bit.
/// Throws std::domain_error for x <= 0 and std::overflow_error for x > 171.6.
double gamma(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(p) / Gamma(q) without intermediate overflow for p, q up to a few
/// hundred. Throws std::domain_error for nonpositive arguments.
double gamma_ratio(double p, double q);

struct GammaRatio {
  double numerator_arg;
  double denominator_arg;
  double value;

  static GammaRatio of(double p, double q) { return {p, q, gamma_ratio(p, q)}; }
};

/// t^p / Gamma(p + 1) for t >= 0, p >= 0, with 0^0 = 1.
double fractional_monomial(double t, double p);

/// sum_{n=0}^{terms} a^{2n} t^{2n alpha} / Gamma(2n alpha + 1)
double frac_cosh_series(double alpha, double a, double t, int terms);

/// sum_{n=0}^{terms} a^{2n+1} t^{(2n+1) alpha} / Gamma((2n+1) alpha + 1)
double frac_sinh_series(double alpha, double a, double t, int terms);

}  // namespace arps::special
