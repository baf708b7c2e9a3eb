#include <doctest.h>

#include <stdexcept>
#include <string>

#include "arps/examples.hpp"
#include "arps/spec_io.hpp"

using namespace arps;

namespace {
const std::string kDir = ARPS_SPEC_DIR;
}

TEST_CASE("bundled spec reproduces the builtin example") {
  const PdeSpec file = load_spec_file(kDir + "/example3.json");
  const PdeSpec builtin = builtin_example(3, std::monostate{}, 1.0);
  const SolveResult a = solve(file, 6);
  const SolveResult b = solve(builtin, 6);
  CHECK(series_distance(a.series, b.series) == 0.0);
  CHECK(a.verified());
}

TEST_CASE("fractional heat spec") {
  const PdeSpec s = load_spec_file(kDir + "/fractional_heat.json");
  CHECK(s.time_order == 1);
  CHECK(s.alpha == 0.5);
  const SolveResult r = solve(s, 5);
  for (int n = 0; n <= 5; ++n) CHECK(hyp_distance(r.series[n], HypExpr::cosh(1)) == 0.0);
}

TEST_CASE("cubic dispersive spec matches example 4") {
  const PdeSpec s = load_spec_file(kDir + "/cubic_dispersive.json");
  const SolveResult a = solve(s, 6);
  const SolveResult b = solve(builtin_example(4, std::monostate{}, 0.75), 6);
  CHECK(series_distance(a.series, b.series) <= 1e-15);
}

TEST_CASE("round trip through JSON") {
  for (int id = 1; id <= 4; ++id) {
    const PdeSpec s = builtin_example(id, default_params(id), 0.5);
    const PdeSpec back = parse_spec(spec_to_json(s));
    CHECK(back.time_order == s.time_order);
    CHECK(back.alpha == s.alpha);
    CHECK(back.rhs.to_string() == s.rhs.to_string());
    CHECK(hyp_distance(back.ic_a, s.ic_a) == 0.0);
    CHECK(series_distance(solve(back, 4).series, solve(s, 4).series) == 0.0);
  }
}

TEST_CASE("malformed specs are rejected with a path") {
  auto message = [](const std::string& text) {
    try {
      parse_spec(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message("{").find("malformed JSON") != std::string::npos);
  CHECK(message("[]").find("expected an object") != std::string::npos);
  CHECK(message(R"({"alpha": 1, "rhs": {"node": "solution"}, "ic_a": []})").find("time_order") !=
        std::string::npos);
  CHECK(message(R"({"time_order": 1, "alpha": 1, "rhs": {"node": "sqrt"}, "ic_a": []})")
            .find("$.rhs.node") != std::string::npos);
  CHECK(message(R"({"time_order": 1, "alpha": 1, "rhs": {"node": "pow", "power": 1,
                    "child": {"node": "solution"}}, "ic_a": []})")
            .find("$.rhs.power") != std::string::npos);
  CHECK(message(R"({"time_order": 1, "alpha": 1, "rhs": {"node": "add", "terms": [
                    {"node": "solution"}, {"node": "dx", "order": 0, "child": {"node": "solution"}}]},
                    "ic_a": []})")
            .find("$.rhs.terms[1].order") != std::string::npos);
  CHECK(message(R"({"time_order": 1, "alpha": 1, "rhs": {"node": "solution"},
                    "ic_a": [{"kind": "tanh", "freq": 1, "coeff": 1}]})")
            .find("$.ic_a[0].kind") != std::string::npos);
  CHECK(message(R"({"time_order": 2, "alpha": 1, "rhs": {"node": "solution"}, "ic_a": []})")
            .find("ic_b") != std::string::npos);
  CHECK(message(R"({"time_order": 1, "alpha": 1.5, "rhs": {"node": "solution"}, "ic_a": []})")
            .find("alpha") != std::string::npos);
  CHECK_THROWS(load_spec_file(kDir + "/missing.json"));
}

TEST_CASE("term lists") {
  const HypExpr e = parse_hypexpr(R"([{"kind": "const", "coeff": 2},
                                      {"kind": "sinh", "freq": 0.5, "coeff": -1}])");
  CHECK(e.coefficient(Basis::Const) == 2.0);
  CHECK(e.coefficient(Basis::Sinh, 0.5) == -1.0);
  CHECK_THROWS(parse_hypexpr(R"([{"kind": "cosh", "coeff": 1}])"));
}
