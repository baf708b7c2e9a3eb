#pragma once

#include <string>

#include "arps/solver.hpp"

namespace arps {

/// JSON form of a PdeSpec:
///
///   {"time_order": 2, "alpha": 1.0,
///    "rhs": {"node": "dx", "order": 2, "child": {"node": "pow", "power": 2,
///                                                "child": {"node": "solution"}}},
///    "ic_a": [{"kind": "cosh", "freq": 1, "coeff": 1}, {"kind": "const", "coeff": -1}],
///    "ic_b": [{"kind": "sinh", "freq": 1, "coeff": -1}]}
///
/// Node tags: solution, const {value}, add {terms}, scale {factor, child},
/// mul {left, right}, pow {power, child}, dx {order, child}.
/// Parse failures throw std::invalid_argument naming the offending path.
PdeSpec parse_spec(const std::string& json_text);
PdeSpec load_spec_file(const std::string& path);
std::string spec_to_json(const PdeSpec& spec, int indent = 2);

HypExpr parse_hypexpr(const std::string& json_text);

}  // namespace arps
