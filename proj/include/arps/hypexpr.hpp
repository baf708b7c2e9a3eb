#pragma once

#include <string>
#include <vector>

namespace arps {

enum class Basis { Const, Cosh, Sinh };

struct HypTerm {
  Basis kind;
  double freq;
  double coeff;
};

/// Finite linear combination of 1, cosh(k x) and sinh(k x).
///
/// Always held in canonical form: terms sorted by (kind, frequency), one term
/// per (kind, frequency) pair with frequencies closer than 1e-12 merged,
/// cosh/sinh of negative frequency folded by parity, and terms below
/// 1e-15 * (largest |coeff|) dropped.
class HypExpr {
 public:
  static constexpr double kFreqMergeTol = 1e-12;
  static constexpr double kRelativePrune = 1e-15;

  HypExpr() = default;
  explicit HypExpr(std::vector<HypTerm> terms);

  static HypExpr constant(double c);
  static HypExpr cosh(double freq, double coeff = 1.0);
  static HypExpr sinh(double freq, double coeff = 1.0);

  const std::vector<HypTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double max_abs_coeff() const;

  /// Coefficient of the given basis function, 0 when absent.
  double coefficient(Basis kind, double freq = 0.0) const;

  double operator()(double x) const;
  HypExpr derivative(int order = 1) const;

  /// e.g. "-0.666667 + 0.666667*cosh(0.5*x)"
  std::string to_string() const;

  HypExpr operator-() const;
  HypExpr& operator+=(const HypExpr& rhs);
  HypExpr& operator-=(const HypExpr& rhs);
  HypExpr& operator*=(double scale);

  friend HypExpr operator+(HypExpr lhs, const HypExpr& rhs) { return lhs += rhs; }
  friend HypExpr operator-(HypExpr lhs, const HypExpr& rhs) { return lhs -= rhs; }
  friend HypExpr operator*(HypExpr e, double scale) { return e *= scale; }
  friend HypExpr operator*(double scale, HypExpr e) { return e *= scale; }
  friend HypExpr operator*(const HypExpr& lhs, const HypExpr& rhs);

 private:
  void canonicalize();

  std::vector<HypTerm> terms_;
};

HypExpr hyp_add(const HypExpr& a, const HypExpr& b);
HypExpr hyp_mul(const HypExpr& a, const HypExpr& b);
HypExpr hyp_diff(const HypExpr& e, int order);
double hyp_eval(const HypExpr& e, double x);

/// Largest |coeff| of a - b.
double hyp_distance(const HypExpr& a, const HypExpr& b);

}  // namespace arps
