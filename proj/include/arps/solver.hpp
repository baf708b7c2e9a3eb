#pragma once

#include <optional>
#include <vector>

#include "arps/ara.hpp"
#include "arps/frac_series.hpp"
#include "arps/hypexpr.hpp"
#include "arps/operator_ast.hpp"

namespace arps {

/// D_t^{k alpha} y = rhs[y],  y(x, 0) = ic_a,  D_t^alpha y(x, 0) = ic_b (k = 2).
struct PdeSpec {
  int time_order = 1;
  double alpha = 1.0;
  OperatorAst rhs;
  HypExpr ic_a;
  std::optional<HypExpr> ic_b;

  /// Throws std::invalid_argument on a bad order, alpha or IC combination.
  void validate() const;
};

struct SolveResult {
  FracSeries series;
  /// Largest |coefficient| of the ARA residual at each order 0..K.
  std::vector<double> residual_leading;
  double tolerance = 0.0;

  bool verified() const;
};

/// Coefficient recursion c_{n+k} = [rhs(y truncated at n + k - 1)]_n.
/// Requires order >= spec.time_order.
SolveResult solve(const PdeSpec& spec, int order = 6);

/// Order-n ARA residual divided by s^{k alpha}, as a formal image:
///
///   G2[y_n] - k alpha G1[y_n]/s + IC terms - s^{-k alpha} G2[rhs(y_n)]
///
/// built from the transform rules for D^alpha and D^{2 alpha}.
AraSeries ara_residual(const PdeSpec& spec, const FracSeries& series, int n);

/// Coefficient of s^{-(n alpha + 1)} in ara_residual; zero for a correct
/// solution.
HypExpr residual_check(const PdeSpec& spec, const FracSeries& series, int n);
HypExpr residual_check(const PdeSpec& spec, const SolveResult& result, int n);

}  // namespace arps
