#include "arps/spec_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace arps {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument("spec " + path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) fail(path, std::string("missing \"") + key + "\"");
  return j.at(key);
}

double number(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

int integer(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

HypExpr expr_from(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of terms");
  std::vector<HypTerm> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const json& t = j[i];
    const json& kind = field(t, "kind", p);
    if (!kind.is_string()) fail(p + ".kind", "expected a string");
    const std::string k = kind.get<std::string>();
    const double coeff = number(t, "coeff", p);
    if (k == "const") {
      terms.push_back({Basis::Const, 0.0, coeff});
    } else if (k == "cosh" || k == "sinh") {
      const double freq = number(t, "freq", p);
      terms.push_back({k == "cosh" ? Basis::Cosh : Basis::Sinh, freq, coeff});
    } else {
      fail(p + ".kind", "unknown basis \"" + k + "\"");
    }
  }
  try {
    return HypExpr(std::move(terms));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

OperatorAst ast_from(const json& j, const std::string& path) {
  const json& tag = field(j, "node", path);
  if (!tag.is_string()) fail(path + ".node", "expected a string");
  const std::string node = tag.get<std::string>();
  try {
    if (node == "solution") return OperatorAst::solution();
    if (node == "const") return OperatorAst::constant(number(j, "value", path));
    if (node == "add") {
      const json& terms = field(j, "terms", path);
      if (!terms.is_array() || terms.empty()) fail(path + ".terms", "expected a non-empty list");
      std::vector<OperatorAst> children;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        children.push_back(ast_from(terms[i], path + ".terms[" + std::to_string(i) + "]"));
      }
      return OperatorAst::add(std::move(children));
    }
    if (node == "scale") {
      return OperatorAst::scale(number(j, "factor", path),
                                ast_from(field(j, "child", path), path + ".child"));
    }
    if (node == "mul") {
      return OperatorAst::mul(ast_from(field(j, "left", path), path + ".left"),
                              ast_from(field(j, "right", path), path + ".right"));
    }
    if (node == "pow") {
      const int power = integer(j, "power", path);
      if (power < 2) fail(path + ".power", "must be >= 2");
      return OperatorAst::pow(power,
                              ast_from(field(j, "child", path), path + ".child"));
    }
    if (node == "dx") {
      const int order = integer(j, "order", path);
      if (order < 1) fail(path + ".order", "must be >= 1");
      return OperatorAst::dx(order,
                             ast_from(field(j, "child", path), path + ".child"));
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  fail(path + ".node", "unknown node \"" + node + "\"");
}

json expr_to(const HypExpr& e) {
  json out = json::array();
  for (const auto& t : e.terms()) {
    switch (t.kind) {
      case Basis::Const:
        out.push_back({{"kind", "const"}, {"coeff", t.coeff}});
        break;
      case Basis::Cosh:
        out.push_back({{"kind", "cosh"}, {"freq", t.freq}, {"coeff", t.coeff}});
        break;
      case Basis::Sinh:
        out.push_back({{"kind", "sinh"}, {"freq", t.freq}, {"coeff", t.coeff}});
        break;
    }
  }
  return out;
}

json ast_to(const OperatorAst& op) {
  switch (op.kind()) {
    case AstKind::Solution:
      return {{"node", "solution"}};
    case AstKind::Const:
      return {{"node", "const"}, {"value", op.value()}};
    case AstKind::Add: {
      json terms = json::array();
      for (const auto& c : op.children()) terms.push_back(ast_to(c));
      return {{"node", "add"}, {"terms", terms}};
    }
    case AstKind::Scale:
      return {{"node", "scale"}, {"factor", op.value()}, {"child", ast_to(op.children()[0])}};
    case AstKind::Mul:
      return {{"node", "mul"},
              {"left", ast_to(op.children()[0])},
              {"right", ast_to(op.children()[1])}};
    case AstKind::PowInt:
      return {{"node", "pow"}, {"power", op.integer()}, {"child", ast_to(op.children()[0])}};
    case AstKind::Dx:
      return {{"node", "dx"}, {"order", op.integer()}, {"child", ast_to(op.children()[0])}};
  }
  return {};
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("spec: malformed JSON: ") + e.what());
  }
}

}  // namespace

PdeSpec parse_spec(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object()) fail("$", "expected an object");
  PdeSpec spec;
  spec.time_order = integer(j, "time_order", "$");
  spec.alpha = number(j, "alpha", "$");
  spec.rhs = ast_from(field(j, "rhs", "$"), "$.rhs");
  spec.ic_a = expr_from(field(j, "ic_a", "$"), "$.ic_a");
  if (j.contains("ic_b") && !j.at("ic_b").is_null()) {
    spec.ic_b = expr_from(j.at("ic_b"), "$.ic_b");
  }
  spec.validate();
  return spec;
}

PdeSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string spec_to_json(const PdeSpec& spec, int indent) {
  json j = {{"time_order", spec.time_order},
            {"alpha", spec.alpha},
            {"rhs", ast_to(spec.rhs)},
            {"ic_a", expr_to(spec.ic_a)}};
  if (spec.ic_b) j["ic_b"] = expr_to(*spec.ic_b);
  return j.dump(indent);
}

HypExpr parse_hypexpr(const std::string& json_text) {
  return expr_from(parse_text(json_text), "$");
}

}  // namespace arps
