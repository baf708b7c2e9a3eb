#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "arps/ara.hpp"
#include "arps/examples.hpp"
#include "arps/special.hpp"
#include "arps/validation.hpp"

using namespace arps;

TEST_CASE("series image") {
  const HypExpr a = HypExpr::cosh(1) - HypExpr::constant(1);
  CHECK(hyp_distance(to_ara(FracSeries(0.3, {a}))[0], a) == 0.0);

  const HypExpr b = HypExpr::sinh(2);
  const AraSeries h = to_ara(FracSeries(1.0, {HypExpr{}, b}));
  CHECK(hyp_distance(h[1], 2.0 * b) == 0.0);
  CHECK(to_ara(FracSeries::zero(0.5, 3))[3].is_zero());

  const AraSeries img(0.5, {HypExpr{}, 1.5 * HypExpr::sinh(1)});
  CHECK(hyp_distance(from_ara(img)[1], HypExpr::sinh(1)) == 0.0);

  // Boussinesq data: h_0 = a, h_1 = (alpha + 1) gamma (gamma^2 - 1) sinh x.
  const double al = 0.6;
  const PdeSpec spec = builtin_example(2, BoussinesqParams{2.0}, al);
  const FracSeries back = from_ara(to_ara(solve(spec, 3).series));
  CHECK(hyp_distance(back[0], -3.0 * (HypExpr::cosh(1) - HypExpr::constant(1))) <= 1e-15);
  CHECK(hyp_distance(back[1], HypExpr::sinh(1, 6.0)) <= 1e-15);
}

TEST_CASE("round trip is exact up to one rounding") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> alpha(0.1, 1.0);
  for (int i = 0; i < 100; ++i) {
    const FracSeries s = random_series(rng, alpha(rng), 6);
    const FracSeries back = from_ara(to_ara(s));
    for (int n = 0; n <= 6; ++n) {
      CHECK(hyp_distance(back[n], s[n]) <= 1e-15 * s[n].max_abs_coeff());
    }
  }
}

TEST_CASE("order-one view and shifts") {
  const AraSeries h(0.5, {HypExpr::constant(1), HypExpr::constant(3), HypExpr::constant(4)});
  const AraSeries g1 = h.order_one_over_s();
  CHECK(g1[1].coefficient(Basis::Const) == doctest::Approx(2.0));
  CHECK(g1[2].coefficient(Basis::Const) == doctest::Approx(2.0));
  const AraSeries sh = h.shifted(2);
  CHECK(sh.order() == 4);
  CHECK(sh[0].is_zero());
  CHECK(sh[2].coefficient(Basis::Const) == 1.0);
  const double s = 3.0;
  const double direct = 1.0 / s + 3.0 / std::pow(s, 1.5) + 4.0 / std::pow(s, 2.0);
  CHECK(h.eval_order_two(0.0, s) == doctest::Approx(direct));
  CHECK(h.eval_order_one(0.0, s) == doctest::Approx(1.0 + 2.0 / std::sqrt(s) + 2.0 / s));
}

TEST_CASE("numeric transform") {
  const auto one = [](double) { return 1.0; };
  for (double s : {0.5, 3.0, 40.0}) {
    CHECK(ara_numeric(one, 1, s).value == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(ara_numeric([](double t) { return t; }, 2, 2.0).value ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ara_numeric([](double t) { return std::sqrt(t); }, 2, 1.0).value ==
        doctest::Approx(1.3293403881791370205).epsilon(1e-12));
  CHECK_THROWS(ara_numeric(one, 3, 1.0));
  CHECK_THROWS(ara_numeric(one, 1, 0.0));

  // A horizon that is too short is reported, not hidden.
  AraNumericOptions opts;
  opts.horizon = 2.0;
  const auto r = ara_numeric(one, 1, 1.0, opts);
  CHECK(r.tail_warning);
  CHECK(r.value == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-12));

  // Growth faster than the kernel decays cannot be truncated.
  CHECK(ara_numeric([](double t) { return std::exp(2 * t); }, 1, 1.0).tail_warning);
}

TEST_CASE("monomial images") {
  CHECK(ara_monomial(0, 1, 7.0) == doctest::Approx(1.0));
  CHECK(ara_monomial(1, 2, 1.0) == doctest::Approx(2.0));
  CHECK(ara_monomial(0.5, 1, 4.0) == doctest::Approx(0.44311346272637900682).epsilon(1e-14));
  CHECK_THROWS(ara_monomial(-1, 1, 1));
  for (double p : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    for (int n : {1, 2}) {
      for (double s : {1.0, 2.0, 5.0, 10.0}) {
        const double num = ara_numeric([p](double t) { return std::pow(t, p); }, n, s).value;
        CHECK(std::abs(num / ara_monomial(p, n, s) - 1.0) <= 1e-8);
      }
    }
  }
}

TEST_CASE("transform properties") {
  PropertyCase c;
  c.f = [](double t) { return t; };
  c.g = [](double t) { return t * t; };
  CHECK(verify_property(1, c).max_discrepancy <= 1e-9);

  c.f = [](double t) { return 2.5 + std::sin(t); };
  c.alpha = 1.0;  // smooth f: integer powers of 1/s
  const auto p7 = verify_property(7, c, {20, 40, 80, 160});
  REQUIRE(p7.extrapolated.has_value());
  INFO("extrapolated " << *p7.extrapolated - 2.5);
  CHECK(std::abs(*p7.extrapolated - 2.5) <= 1e-6);
  CHECK(p7.s_values.size() == 4);

  PropertyCase d;
  d.alpha = 0.5;
  d.f = [](double t) { return std::pow(t, 1.5); };
  CHECK(verify_property(3, d, {2, 4, 8}).max_discrepancy <= 1e-8);
  CHECK(verify_property(5, d, {2, 4, 8}).max_discrepancy <= 1e-8);
  CHECK(verify_property(4, d).max_discrepancy <= 1e-10);

  // Property 6 with the exact first derivative D^{1/2} t^{3/2}.
  d.caputo = [](double t) { return special::gamma(2.5) / special::gamma(2.0) * t; };
  CHECK(verify_property(6, d, {2, 4}).max_discrepancy <= 1e-7);

  CHECK_THROWS_AS(verify_property(0, d), std::invalid_argument);
  CHECK_THROWS_AS(verify_property(1, d), std::invalid_argument);  // g missing
  d.caputo = nullptr;
  CHECK_THROWS_AS(verify_property(6, d), std::invalid_argument);
}

TEST_CASE("termwise image matches the numeric transform of the series") {
  std::mt19937_64 rng(43);
  const FracSeries s = random_series(rng, 0.45, 5, 2, 1.0, 1.0);
  const AraSeries h = to_ara(s);
  for (double s0 : {5.0, 9.0}) {
    const double num = ara_numeric([&](double t) { return series_eval(s, 0.7, t); }, 2, s0).value;
    CHECK(std::abs(h.eval_order_two(0.7, s0) - num) <= 1e-10);
  }
}
