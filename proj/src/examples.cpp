#include "arps/examples.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "arps/special.hpp"

namespace arps {

namespace {

using Op = OperatorAst;

const KleinGordonParams& klein_gordon(const ExampleParams& p) {
  const auto* kg = std::get_if<KleinGordonParams>(&p);
  if (kg == nullptr) throw std::invalid_argument("example 1 needs v, w, lambda");
  if (!(kg->v > 0.0 && kg->w > 0.0)) throw std::invalid_argument("example 1 needs v, w > 0");
  if (!std::isfinite(kg->lambda)) throw std::invalid_argument("example 1 needs finite lambda");
  return *kg;
}

const BoussinesqParams& boussinesq(const ExampleParams& p) {
  const auto* b = std::get_if<BoussinesqParams>(&p);
  if (b == nullptr) throw std::invalid_argument("example 2 needs gamma");
  if (!std::isfinite(b->gamma)) throw std::invalid_argument("example 2 needs finite gamma");
  return *b;
}

void expect_none(const ExampleParams& p, int id) {
  if (!std::holds_alternative<std::monostate>(p)) {
    throw std::invalid_argument("example " + std::to_string(id) + " takes no parameters");
  }
}

// Spatial profile of the k = 2 examples: y = -A (cosh(kx) C - sinh(kx) S - 1)
// with C, S the even and odd fractional series in mu t^alpha.
struct WaveProfile {
  double amplitude;
  double wavenumber;
  double speed;
};

WaveProfile profile(int id, const ExampleParams& p) {
  switch (id) {
    case 1: {
      const auto& kg = klein_gordon(p);
      const double r = std::sqrt(kg.v / kg.w);
      return {2.0 * kg.lambda * kg.lambda / (3.0 * kg.v), 0.5 * r, 0.5 * kg.lambda * r};
    }
    case 2: {
      const double g = boussinesq(p).gamma;
      return {g * g - 1.0, 1.0, g};
    }
    default:
      expect_none(p, id);
      return {-1.0, 1.0, 1.0};
  }
}

// Sums sum_n a^{2n + parity} t^{(2n + parity) alpha} / Gamma(...) until the
// terms stop mattering, or exactly `terms` terms when requested.
double parity_sum(double alpha, double a, double t, int parity, int terms, double& tail) {
  auto term = [&](int n) {
    const int m = 2 * n + parity;
    return std::pow(a, m) * special::fractional_monomial(t, m * alpha);
  };
  double sum = 0.0;
  if (terms > 0) {
    for (int n = 0; n <= terms; ++n) sum += term(n);
    tail = std::abs(term(terms + 1)) + std::abs(term(terms + 2));
    return sum;
  }
  constexpr int kMaxTerms = 400;
  int n = 0;
  double last = 0.0;
  for (; n <= kMaxTerms; ++n) {
    last = term(n);
    sum += last;
    if (n > 2 && std::abs(last) <= 1e-17 * std::max(1.0, std::abs(sum))) break;
  }
  tail = std::abs(term(n + 1)) + std::abs(term(n + 2));
  return sum;
}

}  // namespace

ExampleParams default_params(int id) {
  switch (id) {
    case 1:
      return KleinGordonParams{};
    case 2:
      return BoussinesqParams{};
    case 3:
    case 4:
      return std::monostate{};
    default:
      throw std::invalid_argument("unknown example id " + std::to_string(id));
  }
}

PdeSpec builtin_example(int id, const ExampleParams& params, double alpha) {
  const Op y = Op::solution();
  PdeSpec spec;
  spec.alpha = alpha;
  switch (id) {
    case 1: {
      const auto& kg = klein_gordon(params);
      const WaveProfile wp = profile(1, params);
      spec.time_order = 2;
      spec.rhs = kg.v * Op::dx(2, Op::pow(2, y)) - kg.w * Op::dx(4, Op::pow(2, y));
      spec.ic_a = wp.amplitude * (HypExpr::constant(1.0) - HypExpr::cosh(wp.wavenumber));
      spec.ic_b = HypExpr::sinh(wp.wavenumber, wp.amplitude * wp.speed);
      break;
    }
    case 2: {
      const double g = boussinesq(params).gamma;
      const double amp = g * g - 1.0;
      spec.time_order = 2;
      spec.rhs = Op::dx(2, y) + Op::dx(2, Op::pow(2, y)) - Op::dx(2, y * Op::dx(2, y));
      spec.ic_a = -amp * (HypExpr::cosh(1.0) - HypExpr::constant(1.0));
      spec.ic_b = HypExpr::sinh(1.0, g * amp);
      break;
    }
    case 3:
      expect_none(params, 3);
      spec.time_order = 2;
      spec.rhs = Op::dx(2, y * Op::dx(2, y)) - Op::dx(2, Op::pow(2, y));
      spec.ic_a = HypExpr::cosh(1.0) - HypExpr::constant(1.0);
      spec.ic_b = HypExpr::sinh(1.0, -1.0);
      break;
    case 4:
      expect_none(params, 4);
      spec.time_order = 1;
      spec.rhs = Op::dx(1, Op::pow(3, y)) - Op::dx(3, Op::pow(3, y));
      spec.ic_a = HypExpr::sinh(1.0 / 3.0, std::sqrt(1.5));
      break;
    default:
      throw std::invalid_argument("unknown example id " + std::to_string(id));
  }
  spec.validate();
  return spec;
}

ExactValue exact_solution(int id, const ExampleParams& params, double alpha, double x, double t,
                          int terms) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0, 1]");
  if (!(t >= 0.0)) throw std::domain_error("t must be >= 0");
  if (terms < 0) throw std::invalid_argument("terms must be >= 0");

  ExactValue out;
  if (id == 4) {
    expect_none(params, 4);
    out.value = std::sqrt(1.5) * std::sinh((x - std::pow(t, alpha)) / 3.0);
    return out;
  }
  if (id < 1 || id > 3) throw std::invalid_argument("unknown example id " + std::to_string(id));

  const WaveProfile wp = profile(id, params);
  const double kx = wp.wavenumber * x;
  if (alpha == 1.0 && terms == 0) {
    // Both parity series close to cosh / sinh, leaving a travelling wave.
    const double arg = kx - wp.speed * t;
    const double half = std::sinh(0.5 * arg);
    out.value = -2.0 * wp.amplitude * half * half + 0.0;
    return out;
  }
  double tail_even = 0.0;
  double tail_odd = 0.0;
  const double even = parity_sum(alpha, wp.speed, t, 0, terms, tail_even);
  const double odd = parity_sum(alpha, wp.speed, t, 1, terms, tail_odd);
  out.value = -wp.amplitude * (std::cosh(kx) * even - std::sinh(kx) * odd - 1.0);
  out.tail_bound = std::abs(wp.amplitude) *
                   (std::cosh(kx) * tail_even + std::abs(std::sinh(kx)) * tail_odd);
  out.tail_warning = out.tail_bound > 1e-14 * std::max(1.0, std::abs(out.value));
  return out;
}

}  // namespace arps
