#pragma once

#include <functional>
#include <stdexcept>

namespace arps {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureEstimate {
  double value = 0.0;
  double error = 0.0;  // level-to-level difference, an overestimate in practice
  double l1 = 0.0;     // integral of |f|
};

/// Double-exponential quadrature of f over [a, b]. The integrand receives the
/// abscissa and its signed distance to the nearest endpoint (b - x near b,
/// a - x near a), which keeps endpoint-singular integrands accurate.
///
/// Throws QuadratureError when the estimate stays above
/// max(abs_tol, rel_floor * l1) after max_levels refinements.
QuadratureEstimate integrate_endpoint_safe(const std::function<double(double, double)>& f,
                                           double a, double b, double abs_tol,
                                           int max_levels);

/// Same, for integrands that do not need the endpoint distance.
QuadratureEstimate integrate(const std::function<double(double)>& f, double a, double b,
                             double abs_tol, int max_levels);

}  // namespace arps
