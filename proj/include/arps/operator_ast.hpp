#pragma once

#include <memory>
#include <string>
#include <vector>

#include "arps/frac_series.hpp"

namespace arps {

enum class AstKind { Solution, Const, Add, Scale, Mul, PowInt, Dx };

/// Immutable expression tree for the spatial operator N_x[y]. Nodes are
/// shared, so copies are cheap.
class OperatorAst {
 public:
  /// The zero operator.
  OperatorAst();

  static OperatorAst solution();
  static OperatorAst constant(double value);
  static OperatorAst add(std::vector<OperatorAst> terms);
  static OperatorAst scale(double factor, OperatorAst child);
  static OperatorAst mul(OperatorAst left, OperatorAst right);
  /// Throws std::invalid_argument for power < 2.
  static OperatorAst pow(int power, OperatorAst child);
  /// Throws std::invalid_argument for order < 1.
  static OperatorAst dx(int order, OperatorAst child);

  AstKind kind() const { return node_->kind; }
  double value() const { return node_->value; }    // Const, Scale
  int integer() const { return node_->integer; }   // PowInt, Dx
  const std::vector<OperatorAst>& children() const { return node_->children; }

  /// Infix rendering, e.g. "(dx^2((y)^2) - dx^4((y)^2))".
  std::string to_string() const;
  int node_count() const;

 private:
  struct Node {
    AstKind kind;
    double value = 0.0;
    int integer = 0;
    std::vector<OperatorAst> children;
  };

  explicit OperatorAst(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

OperatorAst operator+(const OperatorAst& a, const OperatorAst& b);
OperatorAst operator-(const OperatorAst& a, const OperatorAst& b);
OperatorAst operator*(const OperatorAst& a, const OperatorAst& b);
OperatorAst operator*(double factor, const OperatorAst& a);

/// N[y] with series arithmetic; the result has the order of y.
FracSeries evaluate(const OperatorAst& op, const FracSeries& y);

}  // namespace arps
