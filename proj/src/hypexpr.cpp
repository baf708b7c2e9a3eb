#include "arps/hypexpr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace arps {

namespace {

std::string format_g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool term_less(const HypTerm& a, const HypTerm& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.freq < b.freq;
}

}  // namespace

HypExpr::HypExpr(std::vector<HypTerm> terms) : terms_(std::move(terms)) { canonicalize(); }

HypExpr HypExpr::constant(double c) { return HypExpr({{Basis::Const, 0.0, c}}); }
HypExpr HypExpr::cosh(double freq, double coeff) { return HypExpr({{Basis::Cosh, freq, coeff}}); }
HypExpr HypExpr::sinh(double freq, double coeff) { return HypExpr({{Basis::Sinh, freq, coeff}}); }

void HypExpr::canonicalize() {
  std::vector<HypTerm> folded;
  folded.reserve(terms_.size());
  for (HypTerm term : terms_) {
    if (!std::isfinite(term.coeff) || !std::isfinite(term.freq)) {
      throw std::invalid_argument("HypExpr: non-finite coefficient or frequency");
    }
    if (term.kind == Basis::Const) {
      term.freq = 0.0;
    } else {
      if (term.freq < 0.0) {
        term.freq = -term.freq;
        if (term.kind == Basis::Sinh) term.coeff = -term.coeff;
      }
      if (term.freq <= kFreqMergeTol) {
        if (term.kind == Basis::Sinh) continue;  // sinh(0) = 0
        term = {Basis::Const, 0.0, term.coeff};
      }
    }
    if (term.coeff != 0.0) folded.push_back(term);
  }

  std::sort(folded.begin(), folded.end(), term_less);

  std::vector<HypTerm> merged;
  merged.reserve(folded.size());
  for (const HypTerm& term : folded) {
    if (!merged.empty() && merged.back().kind == term.kind &&
        std::abs(merged.back().freq - term.freq) <= kFreqMergeTol) {
      merged.back().coeff += term.coeff;
    } else {
      merged.push_back(term);
    }
  }

  double largest = 0.0;
  for (const HypTerm& term : merged) largest = std::max(largest, std::abs(term.coeff));
  const double floor = kRelativePrune * largest;
  std::erase_if(merged, [floor](const HypTerm& t) {
    return t.coeff == 0.0 || std::abs(t.coeff) < floor;
  });
  terms_ = std::move(merged);
}

double HypExpr::max_abs_coeff() const {
  double m = 0.0;
  for (const HypTerm& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

double HypExpr::coefficient(Basis kind, double freq) const {
  if (kind != Basis::Const && freq < 0.0) {
    return kind == Basis::Sinh ? -coefficient(kind, -freq) : coefficient(kind, -freq);
  }
  for (const HypTerm& t : terms_) {
    if (t.kind == kind && std::abs(t.freq - freq) <= kFreqMergeTol) return t.coeff;
  }
  return 0.0;
}

double HypExpr::operator()(double x) const {
  double sum = 0.0;
  for (const HypTerm& t : terms_) {
    switch (t.kind) {
      case Basis::Const: sum += t.coeff; break;
      case Basis::Cosh: sum += t.coeff * std::cosh(t.freq * x); break;
      case Basis::Sinh: sum += t.coeff * std::sinh(t.freq * x); break;
    }
  }
  return sum;
}

HypExpr HypExpr::derivative(int order) const {
  if (order < 1) throw std::invalid_argument("HypExpr::derivative: order must be >= 1");
  std::vector<HypTerm> out;
  out.reserve(terms_.size());
  for (const HypTerm& t : terms_) {
    if (t.kind == Basis::Const) continue;
    const bool flips = order % 2 == 1;
    Basis kind = t.kind;
    if (flips) kind = kind == Basis::Cosh ? Basis::Sinh : Basis::Cosh;
    out.push_back({kind, t.freq, t.coeff * std::pow(t.freq, order)});
  }
  return HypExpr(std::move(out));
}

std::string HypExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const HypTerm& t : terms_) {
    double c = t.coeff;
    if (first) {
      first = false;
    } else {
      out += c < 0.0 ? " - " : " + ";
      c = std::abs(c);
    }
    out += format_g6(c);
    if (t.kind != Basis::Const) {
      out += t.kind == Basis::Cosh ? "*cosh(" : "*sinh(";
      out += format_g6(t.freq) + "*x)";
    }
  }
  return out;
}

HypExpr HypExpr::operator-() const { return *this * -1.0; }

HypExpr& HypExpr::operator+=(const HypExpr& rhs) {
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  canonicalize();
  return *this;
}

HypExpr& HypExpr::operator-=(const HypExpr& rhs) {
  for (HypTerm t : rhs.terms_) {
    t.coeff = -t.coeff;
    terms_.push_back(t);
  }
  canonicalize();
  return *this;
}

HypExpr& HypExpr::operator*=(double scale) {
  for (HypTerm& t : terms_) t.coeff *= scale;
  canonicalize();
  return *this;
}

HypExpr operator*(const HypExpr& lhs, const HypExpr& rhs) {
  std::vector<HypTerm> out;
  out.reserve(2 * lhs.terms().size() * rhs.terms().size());
  for (const HypTerm& a : lhs.terms()) {
    for (const HypTerm& b : rhs.terms()) {
      const double c = a.coeff * b.coeff;
      if (a.kind == Basis::Const) {
        out.push_back({b.kind, b.freq, c});
        continue;
      }
      if (b.kind == Basis::Const) {
        out.push_back({a.kind, a.freq, c});
        continue;
      }
      const double sum = a.freq + b.freq;
      const double diff = a.freq - b.freq;
      const double half = 0.5 * c;
      if (a.kind == Basis::Cosh && b.kind == Basis::Cosh) {
        out.push_back({Basis::Cosh, sum, half});
        out.push_back({Basis::Cosh, diff, half});
      } else if (a.kind == Basis::Sinh && b.kind == Basis::Sinh) {
        out.push_back({Basis::Cosh, sum, half});
        out.push_back({Basis::Cosh, diff, -half});
      } else if (a.kind == Basis::Sinh) {
        // sinh a cosh b
        out.push_back({Basis::Sinh, sum, half});
        out.push_back({Basis::Sinh, diff, half});
      } else {
        // cosh a sinh b
        out.push_back({Basis::Sinh, sum, half});
        out.push_back({Basis::Sinh, diff, -half});
      }
    }
  }
  return HypExpr(std::move(out));
}

HypExpr hyp_add(const HypExpr& a, const HypExpr& b) { return a + b; }
HypExpr hyp_mul(const HypExpr& a, const HypExpr& b) { return a * b; }
HypExpr hyp_diff(const HypExpr& e, int order) { return e.derivative(order); }
double hyp_eval(const HypExpr& e, double x) { return e(x); }

double hyp_distance(const HypExpr& a, const HypExpr& b) { return (a - b).max_abs_coeff(); }

}  // namespace arps
