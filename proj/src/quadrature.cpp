#include "arps/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <string>

namespace arps {

namespace {

// Level differences of the tanh-sinh ladder overstate the true error by
// orders of magnitude once the rule has converged, so the hard failure
// threshold sits well above the requested tolerance.
constexpr double kFailureFactor = 1e4;
constexpr double kRelativeFloor = 1e-12;

void check_estimate(const QuadratureEstimate& est, double abs_tol) {
  const double limit = kFailureFactor * std::max(abs_tol, kRelativeFloor * est.l1);
  if (!std::isfinite(est.value) || est.error > limit) {
    throw QuadratureError("quadrature did not converge: error estimate " +
                          std::to_string(est.error) + " exceeds " + std::to_string(limit));
  }
}

}  // namespace

QuadratureEstimate integrate_endpoint_safe(const std::function<double(double, double)>& f,
                                           double a, double b, double abs_tol,
                                           int max_levels) {
  QuadratureEstimate est;
  if (a == b) return est;
  if (b < a) {
    est = integrate_endpoint_safe(f, b, a, abs_tol, max_levels);
    est.value = -est.value;
    return est;
  }
  boost::math::quadrature::tanh_sinh<double> rule(static_cast<std::size_t>(max_levels));
  const double rel_tol = std::max(abs_tol / std::max(1.0, std::abs(b - a)), 1e-15);
  est.value = rule.integrate(f, a, b, rel_tol, &est.error, &est.l1);
  check_estimate(est, abs_tol);
  return est;
}

QuadratureEstimate integrate(const std::function<double(double)>& f, double a, double b,
                             double abs_tol, int max_levels) {
  return integrate_endpoint_safe([&f](double x, double) { return f(x); }, a, b, abs_tol,
                                 max_levels);
}

}  // namespace arps
