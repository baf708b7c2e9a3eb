#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arps/frac_series.hpp"
#include "arps/hypexpr.hpp"

namespace arps {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double limit = 0.0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  int failures() const;
};

/// Runs the invariant suites of every module (special functions, hyperbolic
/// algebra, series arithmetic, transform, numerical Caputo, solver, bench).
ValidationReport run_validation(std::uint64_t seed = 0x5eed);

/// Random expressions for property checks: up to `max_terms` terms with
/// frequencies in [freq_lo, freq_hi] and coefficients in [-coeff, coeff].
HypExpr random_hypexpr(std::mt19937_64& rng, int max_terms = 6, double freq_lo = 0.1,
                       double freq_hi = 3.0, double coeff = 1.0);
FracSeries random_series(std::mt19937_64& rng, double alpha, int order, int max_terms = 3,
                         double freq_hi = 3.0, double coeff = 1.0);

}  // namespace arps
