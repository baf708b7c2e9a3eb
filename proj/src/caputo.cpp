#include "arps/caputo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "arps/quadrature.hpp"
#include "arps/special.hpp"

namespace arps {

void CaputoConfig::validate() const {
  if (!(quadrature_tol > 0.0)) throw std::invalid_argument("CaputoConfig: quadrature_tol must be > 0");
  if (!(derivative_step >= 1e-7 && derivative_step <= 1e-3)) {
    throw std::invalid_argument("CaputoConfig: derivative_step must lie in [1e-7, 1e-3]");
  }
  if (max_panels < 16) throw std::invalid_argument("CaputoConfig: max_panels too small");
}

namespace {

int levels_for(int max_panels) {
  return std::clamp(static_cast<int>(std::log2(static_cast<double>(max_panels))), 4, 20);
}

}  // namespace

double numeric_derivative(const ScalarFn& f, double t, double initial_step) {
  if (!(t > 0.0)) throw std::domain_error("numeric_derivative: t must be positive");
  constexpr int kTable = 10;
  constexpr double kShrink = 1.4;
  constexpr double kShrink2 = kShrink * kShrink;
  constexpr double kSafe = 2.0;

  double h = std::min(initial_step, 0.5 * t);
  std::array<std::array<double, kTable>, kTable> a{};
  a[0][0] = (f(t + h) - f(t - h)) / (2.0 * h);
  double best = a[0][0];
  double err = std::numeric_limits<double>::max();
  for (int i = 1; i < kTable; ++i) {
    h /= kShrink;
    a[0][i] = (f(t + h) - f(t - h)) / (2.0 * h);
    double fac = kShrink2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
      fac *= kShrink2;
      const double errt = std::max(std::abs(a[j][i] - a[j - 1][i]),
                                   std::abs(a[j][i] - a[j - 1][i - 1]));
      if (errt <= err) {
        err = errt;
        best = a[j][i];
      }
    }
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= kSafe * err) break;
  }
  return best;
}

OracleValue rl_integral_numeric(const ScalarFn& f, double alpha, double t,
                                const CaputoConfig& cfg) {
  cfg.validate();
  if (!(alpha > 0.0)) throw std::domain_error("rl_integral_numeric: alpha must be positive");
  if (!(t > 0.0)) throw std::domain_error("rl_integral_numeric: t must be positive");

  const double inv_alpha = 1.0 / alpha;
  // 1 - u^{1/alpha}, accurate as u -> 1 via the endpoint distance.
  auto one_minus_power = [inv_alpha](double u, double uc) {
    if (uc > 0.0 && uc < 0.5) return -std::expm1(std::log1p(-uc) * inv_alpha);
    return 1.0 - std::pow(u, inv_alpha);
  };
  auto integrand = [&](double u, double uc) { return f(t * one_minus_power(u, uc)); };

  const double scale = special::fractional_monomial(t, alpha);
  const QuadratureEstimate q = integrate_endpoint_safe(
      integrand, 0.0, 1.0, cfg.quadrature_tol / std::max(scale, 1e-300),
      levels_for(cfg.max_panels));
  return {scale * q.value, scale * q.error};
}

OracleValue caputo_numeric(const ScalarFn& f, double alpha, double t, const CaputoConfig& cfg) {
  cfg.validate();
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("caputo_numeric: alpha must lie in (0, 1]");
  }
  if (!(t > 0.0)) throw std::domain_error("caputo_numeric: t must be positive");

  const double step = cfg.derivative_step;
  if (alpha == 1.0) return {numeric_derivative(f, t, step), 0.0};

  // Abscissae crowd towards tau = 0, where the difference steps would go
  // subnormal; the clipped sliver is far below the oracle tolerance.
  const double floor = 1e-30 * t;
  ScalarFn derivative = [&f, step, floor](double tau) {
    return numeric_derivative(f, std::max(tau, floor), step);
  };
  return rl_integral_numeric(derivative, 1.0 - alpha, t, cfg);
}

}  // namespace arps
