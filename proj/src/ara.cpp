#include "arps/ara.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arps/caputo.hpp"
#include "arps/quadrature.hpp"
#include "arps/special.hpp"

namespace arps {

AraSeries::AraSeries(double alpha, std::vector<HypExpr> coeffs)
    : alpha_(alpha), coeffs_(std::move(coeffs)) {
  if (!(alpha_ > 0.0 && alpha_ <= 1.0)) {
    throw std::invalid_argument("AraSeries: alpha must lie in (0, 1]");
  }
  if (coeffs_.empty()) throw std::invalid_argument("AraSeries: needs at least one coefficient");
}

AraSeries AraSeries::zero(double alpha, int order) {
  if (order < 0) throw std::invalid_argument("AraSeries: negative order");
  return AraSeries(alpha, std::vector<HypExpr>(static_cast<std::size_t>(order) + 1));
}

AraSeries AraSeries::monomial(double alpha, int order, int index, HypExpr expr) {
  AraSeries a = zero(alpha, order);
  if (index < 0) throw std::invalid_argument("AraSeries::monomial: negative index");
  if (index <= order) a.coeffs_[index] = std::move(expr);
  return a;
}

AraSeries AraSeries::shifted(int m) const {
  if (m < 0) throw std::invalid_argument("AraSeries::shifted: negative shift");
  std::vector<HypExpr> c(static_cast<std::size_t>(m), HypExpr{});
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return AraSeries(alpha_, std::move(c));
}

AraSeries AraSeries::order_one_over_s() const {
  AraSeries out = *this;
  for (int n = 0; n <= order(); ++n) out.coeffs_[n] *= 1.0 / (n * alpha_ + 1.0);
  return out;
}

AraSeries AraSeries::resized(int order) const {
  if (order < 0) throw std::invalid_argument("AraSeries::resized: negative order");
  std::vector<HypExpr> c = coeffs_;
  c.resize(static_cast<std::size_t>(order) + 1);
  return AraSeries(alpha_, std::move(c));
}

double AraSeries::eval_order_two(double x, double s) const {
  if (!(s > 0.0)) throw std::domain_error("AraSeries: s must be positive");
  double sum = 0.0;
  for (int n = 0; n <= order(); ++n) sum += coeffs_[n](x) * std::pow(s, -(n * alpha_ + 1.0));
  return sum;
}

double AraSeries::eval_order_one(double x, double s) const {
  if (!(s > 0.0)) throw std::domain_error("AraSeries: s must be positive");
  double sum = 0.0;
  for (int n = 0; n <= order(); ++n) {
    sum += coeffs_[n](x) / (n * alpha_ + 1.0) * std::pow(s, -n * alpha_);
  }
  return sum;
}

void AraSeries::combine(const AraSeries& rhs, double sign) {
  if (alpha_ != rhs.alpha_) throw std::invalid_argument("AraSeries: alpha mismatch");
  const int order = std::min(this->order(), rhs.order());
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) coeffs_[n] += sign * rhs.coeffs_[n];
}

AraSeries& AraSeries::operator+=(const AraSeries& rhs) {
  combine(rhs, 1.0);
  return *this;
}

AraSeries& AraSeries::operator-=(const AraSeries& rhs) {
  combine(rhs, -1.0);
  return *this;
}

AraSeries& AraSeries::operator*=(double scale) {
  for (auto& h : coeffs_) h *= scale;
  return *this;
}

AraSeries to_ara(const FracSeries& s) {
  std::vector<HypExpr> h;
  h.reserve(s.coeffs().size());
  for (int n = 0; n <= s.order(); ++n) h.push_back(s[n] * (n * s.alpha() + 1.0));
  return AraSeries(s.alpha(), std::move(h));
}

FracSeries from_ara(const AraSeries& a) {
  std::vector<HypExpr> c;
  c.reserve(a.coeffs().size());
  for (int n = 0; n <= a.order(); ++n) c.push_back(a[n] * (1.0 / (n * a.alpha() + 1.0)));
  return FracSeries(a.alpha(), std::move(c));
}

namespace {

constexpr double kTailTarget = 1e-13;
constexpr double kMaxU = 700.0;  // e^{-u} underflows shortly after

}  // namespace

AraNumericResult ara_numeric(const std::function<double(double)>& f, int n, double s,
                             const AraNumericOptions& opts) {
  if (n != 1 && n != 2) throw std::invalid_argument("ara_numeric: order must be 1 or 2");
  if (!(s > 0.0)) throw std::domain_error("ara_numeric: s must be positive");
  if (!(opts.abs_tol > 0.0)) throw std::invalid_argument("ara_numeric: abs_tol must be > 0");

  // With u = s t the transform is int_0^inf (u/s)^{n-1} e^{-u} f(u/s) du.
  auto integrand = [&](double u) {
    const double weight = n == 1 ? std::exp(-u) : (u / s) * std::exp(-u);
    return weight == 0.0 ? 0.0 : weight * f(u / s);
  };
  auto tail_estimate = [&](double u) { return std::abs(integrand(u)) * std::max(u, 1.0); };

  AraNumericResult out;
  double upper = 0.0;
  if (opts.horizon > 0.0) {
    upper = opts.horizon * s;
    out.tail_bound = tail_estimate(upper);
  } else {
    upper = 40.0;
    out.tail_bound = tail_estimate(upper);
    // Stop as soon as the integrand stops decaying; the tail is then reported.
    while (out.tail_bound > kTailTarget && upper < kMaxU) {
      const double next = std::min(1.5 * upper, kMaxU);
      const double next_tail = tail_estimate(next);
      if (!(next_tail < out.tail_bound)) break;
      upper = next;
      out.tail_bound = next_tail;
    }
  }
  out.tail_warning = out.tail_bound > opts.abs_tol;

  // The split at u = 1 (t = 1/s) keeps a possible t^p kink at the origin
  // apart from the exponential decay.
  const double mid = std::min(1.0, upper);
  const QuadratureEstimate head = integrate(integrand, 0.0, mid, 0.5 * opts.abs_tol,
                                            opts.max_levels);
  QuadratureEstimate rest;
  if (upper > mid) rest = integrate(integrand, mid, upper, 0.5 * opts.abs_tol, opts.max_levels);
  out.value = head.value + rest.value;
  out.error_estimate = head.error + rest.error;
  return out;
}

double ara_monomial(double p, int n, double s) {
  if (n != 1 && n != 2) throw std::invalid_argument("ara_monomial: order must be 1 or 2");
  if (!(p >= 0.0)) throw std::domain_error("ara_monomial: p must be >= 0");
  if (!(s > 0.0)) throw std::domain_error("ara_monomial: s must be positive");
  const double e = p + n;
  return std::exp(special::log_gamma(e) - (e - 1.0) * std::log(s));
}

namespace {

using Fn = std::function<double(double)>;

double transform(const Fn& f, int n, double s) { return ara_numeric(f, n, s).value; }

Fn caputo_of(const Fn& f, double alpha) {
  return [f, alpha](double t) {
    if (t <= 0.0) throw std::domain_error("numeric Caputo derivative needs t > 0");
    return caputo_numeric(f, alpha, t).value;
  };
}

Fn first_caputo(const PropertyCase& c) {
  return c.caputo ? c.caputo : caputo_of(c.f, c.alpha);
}

// The leading exponents of s^{-p} in the approach to the limit for inputs
// built from powers t^{m alpha} and integer powers of t.
std::vector<double> limit_exponents(double alpha) {
  std::vector<double> out;
  for (double p : {alpha, 2.0 * alpha, 1.0, 3.0 * alpha, 2.0}) {
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [p](double q) { return std::abs(p - q) < 1e-9; });
    if (!seen) out.push_back(p);
    if (out.size() == 3) break;
  }
  return out;
}

// Fits v(s) = L + sum_i c_i s^{-p_i} through the samples and returns L.
double extrapolate_limit(const std::vector<double>& s, const std::vector<double>& v,
                         double alpha) {
  std::vector<double> p = limit_exponents(alpha);
  p.resize(std::min(p.size(), s.size() - 1));
  const auto rows = static_cast<Eigen::Index>(s.size());
  const auto cols = static_cast<Eigen::Index>(p.size() + 1);
  Eigen::MatrixXd m(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    m(i, 0) = 1.0;
    for (Eigen::Index j = 1; j < cols; ++j) m(i, j) = std::pow(s[i], -p[j - 1]);
    rhs(i) = v[i];
  }
  return m.colPivHouseholderQr().solve(rhs)(0);
}

}  // namespace

PropertyReport verify_property(int id, const PropertyCase& c, std::vector<double> samples) {
  if (id < 1 || id > 7) throw std::invalid_argument("verify_property: id must be in 1..7");
  if (!c.f) throw std::invalid_argument("verify_property: f is required");
  const bool limit = id == 2 || id == 7;
  if (samples.empty()) {
    samples = limit ? std::vector<double>{10, 20, 40, 80} : std::vector<double>{2, 4, 8};
  }
  for (double s : samples) {
    if (!(s > 0.0)) throw std::domain_error("verify_property: s must be positive");
  }

  const double al = c.alpha;
  PropertyReport r;
  r.id = id;
  r.s_values = samples;

  auto record = [&r](double lhs, double rhs) {
    r.lhs.push_back(lhs);
    r.rhs.push_back(rhs);
    r.max_discrepancy = std::max(r.max_discrepancy, std::abs(lhs - rhs));
  };

  switch (id) {
    case 1: {
      if (!c.g) throw std::invalid_argument("verify_property: property 1 needs g");
      r.statement = "G_n[a f + b g] = a G_n[f] + b G_n[g], n = 1, 2";
      const Fn combo = [&c](double t) { return c.a * c.f(t) + c.b * c.g(t); };
      for (double s : samples) {
        for (int n : {1, 2}) {
          record(transform(combo, n, s), c.a * transform(c.f, n, s) + c.b * transform(c.g, n, s));
        }
      }
      break;
    }
    case 2:
    case 7: {
      r.statement = id == 2 ? "lim_{s->inf} G_1[f] = f(0)" : "lim_{s->inf} s G_2[f] = f(0)";
      std::vector<double> values;
      for (double s : samples) {
        values.push_back(id == 2 ? transform(c.f, 1, s) : s * transform(c.f, 2, s));
      }
      r.lhs = values;
      r.rhs.assign(values.size(), c.f(0.0));
      const double lim = samples.size() > 1 ? extrapolate_limit(samples, values, al) : values[0];
      r.extrapolated = lim;
      r.max_discrepancy = std::abs(lim - c.f(0.0));
      break;
    }
    case 3: {
      r.statement = "G_1[D^a f] = s^a G_1[f] - s^a f(0)";
      const Fn d = first_caputo(c);
      for (double s : samples) {
        const double sa = std::pow(s, al);
        record(transform(d, 1, s), sa * transform(c.f, 1, s) - sa * c.f(0.0));
      }
      break;
    }
    case 4: {
      r.statement = "G_2[t^a] = Gamma(a + 2) / s^{a + 1}";
      const Fn power = [al](double t) { return std::pow(t, al); };
      for (double s : samples) {
        record(transform(power, 2, s), special::gamma(al + 2.0) / std::pow(s, al + 1.0));
      }
      break;
    }
    case 5: {
      r.statement = "G_2[D^a f] = s^a G_2[f] - a s^{a-1} G_1[f] + (a - 1) s^{a-1} f(0)";
      const Fn d = first_caputo(c);
      for (double s : samples) {
        const double sa = std::pow(s, al);
        const double sa1 = std::pow(s, al - 1.0);
        record(transform(d, 2, s), sa * transform(c.f, 2, s) - al * sa1 * transform(c.f, 1, s) +
                                       (al - 1.0) * sa1 * c.f(0.0));
      }
      break;
    }
    case 6: {
      if (!c.caputo) {
        throw std::invalid_argument("verify_property: property 6 needs the D^a f callback");
      }
      r.statement =
          "G_2[D^{2a} f] = s^{2a} G_2[f] - 2a s^{2a-1} G_1[f] + (2a - 1) s^{2a-1} f(0)"
          " + (a - 1) s^{a-1} D^a f(0)";
      const Fn d2 = caputo_of(c.caputo, al);
      const double d0 = c.caputo(0.0);
      for (double s : samples) {
        const double s2a = std::pow(s, 2.0 * al);
        const double s2a1 = std::pow(s, 2.0 * al - 1.0);
        const double sa1 = std::pow(s, al - 1.0);
        record(transform(d2, 2, s), s2a * transform(c.f, 2, s) -
                                        2.0 * al * s2a1 * transform(c.f, 1, s) +
                                        (2.0 * al - 1.0) * s2a1 * c.f(0.0) +
                                        (al - 1.0) * sa1 * d0);
      }
      break;
    }
    default:
      break;
  }
  return r;
}

}  // namespace arps
