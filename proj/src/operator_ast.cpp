#include "arps/operator_ast.hpp"

#include <cstdio>
#include <stdexcept>

namespace arps {

OperatorAst::OperatorAst()
    : node_(std::make_shared<const Node>(Node{AstKind::Const, 0.0, 0, {}})) {}

OperatorAst OperatorAst::solution() {
  return OperatorAst(std::make_shared<const Node>(Node{AstKind::Solution, 0.0, 0, {}}));
}

OperatorAst OperatorAst::constant(double value) {
  return OperatorAst(std::make_shared<const Node>(Node{AstKind::Const, value, 0, {}}));
}

OperatorAst OperatorAst::add(std::vector<OperatorAst> terms) {
  if (terms.empty()) throw std::invalid_argument("OperatorAst::add: no terms");
  return OperatorAst(std::make_shared<const Node>(Node{AstKind::Add, 0.0, 0, std::move(terms)}));
}

OperatorAst OperatorAst::scale(double factor, OperatorAst child) {
  return OperatorAst(
      std::make_shared<const Node>(Node{AstKind::Scale, factor, 0, {std::move(child)}}));
}

OperatorAst OperatorAst::mul(OperatorAst left, OperatorAst right) {
  return OperatorAst(std::make_shared<const Node>(
      Node{AstKind::Mul, 0.0, 0, {std::move(left), std::move(right)}}));
}

OperatorAst OperatorAst::pow(int power, OperatorAst child) {
  if (power < 2) throw std::invalid_argument("OperatorAst::pow: exponent must be >= 2");
  return OperatorAst(
      std::make_shared<const Node>(Node{AstKind::PowInt, 0.0, power, {std::move(child)}}));
}

OperatorAst OperatorAst::dx(int order, OperatorAst child) {
  if (order < 1) throw std::invalid_argument("OperatorAst::dx: order must be >= 1");
  return OperatorAst(
      std::make_shared<const Node>(Node{AstKind::Dx, 0.0, order, {std::move(child)}}));
}

std::string OperatorAst::to_string() const {
  char buf[64];
  switch (kind()) {
    case AstKind::Solution:
      return "y";
    case AstKind::Const:
      std::snprintf(buf, sizeof buf, "%g", value());
      return buf;
    case AstKind::Add: {
      std::string out = "(";
      for (std::size_t i = 0; i < children().size(); ++i) {
        const OperatorAst& c = children()[i];
        if (i == 0) {
          out += c.to_string();
        } else if (c.kind() == AstKind::Scale && c.value() == -1.0) {
          out += " - " + c.children()[0].to_string();
        } else {
          out += " + " + c.to_string();
        }
      }
      return out + ")";
    }
    case AstKind::Scale:
      std::snprintf(buf, sizeof buf, "%g*", value());
      return buf + children()[0].to_string();
    case AstKind::Mul:
      return "(" + children()[0].to_string() + " * " + children()[1].to_string() + ")";
    case AstKind::PowInt:
      return "(" + children()[0].to_string() + ")^" + std::to_string(integer());
    case AstKind::Dx:
      return "dx^" + std::to_string(integer()) + "(" + children()[0].to_string() + ")";
  }
  return {};
}

int OperatorAst::node_count() const {
  int n = 1;
  for (const auto& c : children()) n += c.node_count();
  return n;
}

OperatorAst operator+(const OperatorAst& a, const OperatorAst& b) {
  return OperatorAst::add({a, b});
}

OperatorAst operator-(const OperatorAst& a, const OperatorAst& b) {
  return OperatorAst::add({a, OperatorAst::scale(-1.0, b)});
}

OperatorAst operator*(const OperatorAst& a, const OperatorAst& b) {
  return OperatorAst::mul(a, b);
}

OperatorAst operator*(double factor, const OperatorAst& a) {
  return OperatorAst::scale(factor, a);
}

FracSeries evaluate(const OperatorAst& op, const FracSeries& y) {
  switch (op.kind()) {
    case AstKind::Solution:
      return y;
    case AstKind::Const:
      return FracSeries::constant(y.alpha(), y.order(), HypExpr::constant(op.value()));
    case AstKind::Add: {
      FracSeries sum = evaluate(op.children()[0], y);
      for (std::size_t i = 1; i < op.children().size(); ++i) sum += evaluate(op.children()[i], y);
      return sum;
    }
    case AstKind::Scale:
      return evaluate(op.children()[0], y) * op.value();
    case AstKind::Mul:
      return series_mul(evaluate(op.children()[0], y), evaluate(op.children()[1], y));
    case AstKind::PowInt:
      return series_pow(evaluate(op.children()[0], y), op.integer());
    case AstKind::Dx:
      return series_spatial_diff(evaluate(op.children()[0], y), op.integer());
  }
  throw std::logic_error("evaluate: unknown node kind");
}

}  // namespace arps
