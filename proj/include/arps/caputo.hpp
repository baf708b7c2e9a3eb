#pragma once

#include <functional>

namespace arps {

using ScalarFn = std::function<double(double)>;

/// Numerical fractional operators of order alpha in (0, 1] (so m = 1).
/// These are test oracles for the exact series machinery.
struct CaputoConfig {
  double quadrature_tol = 1e-10;
  double derivative_step = 1e-3;  // initial central-difference step
  int max_panels = 1 << 20;

  void validate() const;
};

struct OracleValue {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// J^alpha f(t) = 1/Gamma(alpha) int_0^t (t - tau)^{alpha - 1} f(tau) dtau.
/// The substitution tau = t (1 - u^{1/alpha}) removes the kernel singularity.
OracleValue rl_integral_numeric(const ScalarFn& f, double alpha, double t,
                                const CaputoConfig& cfg = {});

/// D^alpha f(t) = J^{1 - alpha} f'(t) with f' from extrapolated central
/// differences; plain derivative at alpha = 1.
OracleValue caputo_numeric(const ScalarFn& f, double alpha, double t,
                           const CaputoConfig& cfg = {});

/// Richardson-extrapolated central difference (Ridders) at t > 0. Steps are
/// capped at t/2 so f is never sampled at negative arguments.
double numeric_derivative(const ScalarFn& f, double t, double initial_step);

}  // namespace arps
