#pragma once

#include <variant>

#include "arps/solver.hpp"

namespace arps {

struct KleinGordonParams {
  double v = 1.0;
  double w = 1.0;
  double lambda = 1.0;
};

struct BoussinesqParams {
  double gamma = 2.0;
};

/// Example 1 takes KleinGordonParams, example 2 BoussinesqParams, examples
/// 3 and 4 take nothing.
using ExampleParams = std::variant<std::monostate, KleinGordonParams, BoussinesqParams>;

ExampleParams default_params(int id);

/// Throws std::invalid_argument for an unknown id, mismatched parameters or
/// non-positive v, w.
PdeSpec builtin_example(int id, const ExampleParams& params, double alpha = 1.0);

struct ExactValue {
  double value = 0.0;
  double tail_bound = 0.0;
  bool tail_warning = false;
};

/// Closed-form solution. Examples 1-3 at alpha < 1 sum the fractional
/// cosh/sinh series; terms = 0 sums until the tail is negligible.
ExactValue exact_solution(int id, const ExampleParams& params, double alpha, double x, double t,
                          int terms = 0);

}  // namespace arps
