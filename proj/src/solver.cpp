#include "arps/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arps {

void PdeSpec::validate() const {
  if (time_order != 1 && time_order != 2) {
    throw std::invalid_argument("PdeSpec: time_order must be 1 or 2");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("PdeSpec: alpha must lie in (0, 1]");
  }
  if (time_order == 2 && !ic_b) {
    throw std::invalid_argument("PdeSpec: time_order 2 needs ic_b");
  }
  if (time_order == 1 && ic_b) {
    throw std::invalid_argument("PdeSpec: time_order 1 takes no ic_b");
  }
}

bool SolveResult::verified() const {
  return std::all_of(residual_leading.begin(), residual_leading.end(),
                     [this](double r) { return r <= tolerance; });
}

SolveResult solve(const PdeSpec& spec, int order) {
  spec.validate();
  const int k = spec.time_order;
  if (order < k) throw std::invalid_argument("solve: order must be >= time_order");

  std::vector<HypExpr> c(static_cast<std::size_t>(order) + 1);
  c[0] = spec.ic_a;
  if (k == 2) c[1] = *spec.ic_b;
  for (int n = 0; n + k <= order; ++n) {
    const FracSeries partial(spec.alpha, {c.begin(), c.begin() + n + k});
    c[n + k] = evaluate(spec.rhs, partial)[n];
  }

  SolveResult result{FracSeries(spec.alpha, std::move(c)), {}, 0.0};
  double scale = 1.0;
  for (const auto& cn : result.series.coeffs()) scale = std::max(scale, cn.max_abs_coeff());
  result.tolerance = 1e-12 * scale;
  for (int n = 0; n <= order; ++n) {
    result.residual_leading.push_back(residual_check(spec, result.series, n).max_abs_coeff());
  }
  return result;
}

AraSeries ara_residual(const PdeSpec& spec, const FracSeries& series, int n) {
  spec.validate();
  if (n < 0 || n > series.order()) throw std::out_of_range("ara_residual: order out of range");
  if (series.alpha() != spec.alpha) throw std::invalid_argument("ara_residual: alpha mismatch");

  const double a = spec.alpha;
  const int k = spec.time_order;
  const FracSeries yn = series.truncated(n);
  const AraSeries g2 = to_ara(yn);

  AraSeries res = g2 - (k * a) * g2.order_one_over_s();
  if (k == 2) {
    res += AraSeries::monomial(a, n, 0, (2.0 * a - 1.0) * spec.ic_a);
    res += AraSeries::monomial(a, n, 1, (a - 1.0) * *spec.ic_b);
  } else {
    res += AraSeries::monomial(a, n, 0, (a - 1.0) * spec.ic_a);
  }
  res -= to_ara(evaluate(spec.rhs, yn)).shifted(k);
  return res;
}

HypExpr residual_check(const PdeSpec& spec, const FracSeries& series, int n) {
  return ara_residual(spec, series, n)[n];
}

HypExpr residual_check(const PdeSpec& spec, const SolveResult& result, int n) {
  return residual_check(spec, result.series, n);
}

}  // namespace arps
