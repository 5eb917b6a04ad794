#include "tornheim/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace tornheim {

void PrecisionConfig::validate() const {
  if (digits < 10) throw DomainError("precision digits must be >= 10, got " + std::to_string(digits));
  if (max_terms < 100) throw DomainError("max_terms must be >= 100, got " + std::to_string(max_terms));
}

QParam::QParam(const Rational& q) : q_(q) {
  if (q <= Rational(1)) throw DomainError("q > 1 violated (q = " + q.to_string() + ")");
}

namespace {

double log10_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log10(1.0 + std::pow(10.0, std::min(a, b) - hi));
}

// Double-precision magnitudes for truncation bounds. With x = 1/q, a
// summand of exponent e has size (q-1)^e x^n (1 - x^n)^{-e}.
class GeometricBound {
 public:
  explicit GeometricBound(const QParam& q)
      : ln_x_(-std::log(q.value().to_double())),
        log10_x_(ln_x_ / std::log(10.0)),
        log10_qm1_(std::log10((q.value() - Rational(1)).to_double())),
        log10_one_minus_x_(std::log10(-std::expm1(ln_x_))),
        one_minus_x_(-std::expm1(ln_x_)) {}

  // log10 (1 - x^n)^{-e}
  double log10_shape(double e, long n) const {
    return -e * std::log10(-std::expm1(static_cast<double>(n) * ln_x_));
  }
  // log10 sup_{m >= n} (1 - x^m)^{-e}
  double log10_shape_sup(double e, long n) const { return e > 0 ? log10_shape(e, n) : 0.0; }

  // log10 |summand n|
  double log10_term(double e, long n) const {
    return e * log10_qm1_ + static_cast<double>(n) * log10_x_ + log10_shape(e, n);
  }
  // log10 of a bound on sum_{n > cut} |summand n|
  double log10_tail(double e, long cut) const {
    return e * log10_qm1_ + log10_shape_sup(e, cut + 1) + static_cast<double>(cut + 1) * log10_x_ -
           log10_one_minus_x_;
  }
  // same for the weighted summands (n - 1) |summand n|
  double log10_weighted_tail(double e, long cut) const {
    const double n = static_cast<double>(cut);
    return e * log10_qm1_ + log10_shape_sup(e, cut + 1) + (n + 1) * log10_x_ +
           std::log10(n * one_minus_x_ + std::exp(ln_x_)) - 2 * log10_one_minus_x_;
  }
  double log10_qm1() const { return log10_qm1_; }

 private:
  double ln_x_;
  double log10_x_;
  double log10_qm1_;
  double log10_one_minus_x_;
  double one_minus_x_;
};

[[noreturn]] void fail_precision(const std::string& what, long cap) {
  throw PrecisionError(what + ": tail goal not reached within " + std::to_string(cap) + " terms");
}

long cut_for(const GeometricBound& g, double e, const PrecisionConfig& cfg, bool weighted,
             const char* what) {
  const double goal = cfg.tail_goal_exponent();
  for (long n = 1; n <= cfg.max_terms; ++n) {
    const double b = weighted ? g.log10_weighted_tail(e, n) : g.log10_tail(e, n);
    if (b <= goal) return n;
  }
  fail_precision(what, cfg.max_terms);
}

// shape[n] = (1 - x^n)^{-1} for n = 1..count, slot 0 unused.
std::vector<Real> inverse_shapes(const QParam& q, long count, Precision p) {
  std::vector<Real> w(static_cast<std::size_t>(count + 1), Real(p));
  const Real x = Real(1, p) / Real(q.value(), p);
  Real xn(1, p);
  const Real one(1, p);
  for (long n = 1; n <= count; ++n) {
    xn *= x;
    w[n] = one / (one - xn);
  }
  return w;
}

// sigma^n q^{(s-1)n} / [n]_q^s = sigma^n (q-1)^s x^n (1 - x^n)^{-s}, n = 1..count.
std::vector<Real> q_terms(const Rational& s, Sign sigma, const QParam& q, long count, Precision p) {
  const std::vector<Real> w = inverse_shapes(q, count, p);
  const Real x = Real(1, p) / Real(q.value(), p);
  const Real scale = pow(Real(q.value() - Rational(1), p), s);
  std::vector<Real> out(static_cast<std::size_t>(count + 1), Real(p));
  Real xn = scale;
  for (long n = 1; n <= count; ++n) {
    xn *= x;
    out[n] = xn * pow(w[n], s);
    if (sigma == Sign::minus && n % 2 == 1) out[n] = -out[n];
  }
  return out;
}

Real sum_descending(const std::vector<Real>& v, Precision p) {
  Real acc(p);
  for (std::size_t i = v.size(); i-- > 1;) acc += v[i];
  return acc;
}

}  // namespace

Real q_int(long n, const QParam& q, Precision p) {
  if (n < 1) throw DomainError("q_int needs n >= 1, got " + std::to_string(n));
  const Real qq(q.value(), p);
  return (pow(qq, n) - Real(1, p)) / (qq - Real(1, p));
}

SeriesEstimate q_zeta1(const Rational& s, Sign sigma, const QParam& q, const PrecisionConfig& cfg) {
  cfg.validate();
  const GeometricBound g(q);
  const long cut = cut_for(g, s.to_double(), cfg, false, "q_zeta1");
  const Precision p = cfg.working();
  return {sum_descending(q_terms(s, sigma, q, cut, p), p), g.log10_tail(s.to_double(), cut), cut};
}

SeriesEstimate phi_q(const Rational& s, Sign sigma, const QParam& q, const PrecisionConfig& cfg) {
  cfg.validate();
  const GeometricBound g(q);
  const long cut = cut_for(g, s.to_double(), cfg, true, "phi_q");
  const Precision p = cfg.working();
  std::vector<Real> terms = q_terms(s, sigma, q, cut, p);
  for (long n = 1; n <= cut; ++n) terms[n] *= (n - 1);
  return {sum_descending(terms, p), g.log10_weighted_tail(s.to_double(), cut), cut};
}

Real q_zeta2_truncated(const SignedExponent& outer, const SignedExponent& inner, const QParam& q,
                       long truncation, Precision p) {
  Real acc(p);
  if (truncation < 2) return acc;
  const std::vector<Real> a = q_terms(outer.value, outer.sign, q, truncation, p);
  const std::vector<Real> b = q_terms(inner.value, inner.sign, q, truncation, p);
  Real prefix(p);
  for (long m = 2; m <= truncation; ++m) {
    prefix += b[m - 1];
    acc += a[m] * prefix;
  }
  return acc;
}

SeriesEstimate q_zeta2(const SignedExponent& outer, const SignedExponent& inner, const QParam& q,
                       const PrecisionConfig& cfg) {
  cfg.validate();
  const GeometricBound g(q);
  const double s1 = outer.value.to_double();
  const double s2 = inner.value.to_double();
  const double goal = cfg.tail_goal_exponent();
  // Dropped part: sum_{m>N} |a_m| * sum_{n<m} |b_n| <= tail_a(N) * sum_n |b_n|.
  double inner_partial = -std::numeric_limits<double>::infinity();
  long cut = 0;
  double bound = 0;
  for (long n = 1; n <= cfg.max_terms; ++n) {
    inner_partial = log10_add(inner_partial, g.log10_term(s2, n));
    bound = g.log10_tail(s1, n) + log10_add(inner_partial, g.log10_tail(s2, n));
    if (n >= 2 && bound <= goal) {
      cut = n;
      break;
    }
  }
  if (cut == 0) fail_precision("q_zeta2", cfg.max_terms);
  return {q_zeta2_truncated(outer, inner, q, cut, cfg.working()), bound, cut};
}

SeriesEstimate tornheim_q(const Rational& r, const Rational& s, const Rational& t, Sign sigma, Sign tau,
                          const QParam& q, const PrecisionConfig& cfg, Window window,
                          kernels::Backend backend) {
  cfg.validate();
  const GeometricBound g(q);
  const double rd = r.to_double();
  const double sd = s.to_double();
  const double td = t.to_double();
  const double goal = cfg.tail_goal_exponent();
  const double lead = (rd + sd + td) * g.log10_qm1();

  // Terms factor as (q-1)^{r+s+t} x^u x^v f_r(u) f_s(v) f_t(u+v), f_e(n) = (1-x^n)^{-e}.
  // Outside the window u > h or v > h for some h, which gives the bound
  //   lead * sup f_t * (A_tail(h) B_all + A_all B_tail(h)).
  double a_partial = -std::numeric_limits<double>::infinity();
  double b_partial = a_partial;
  long size = 0;     // triangular: u+v <= size; square: u,v <= size
  long h_done = 0;
  double bound = 0;
  for (long m = 2;; ++m) {
    const long h = window == Window::triangular ? m / 2 : m;
    const long first_uncut = window == Window::triangular ? m + 1 : m + 2;
    while (h_done < h) {
      ++h_done;
      a_partial = log10_add(a_partial, static_cast<double>(h_done) * std::log10(1 / q.value().to_double()) +
                                           g.log10_shape(rd, h_done));
      b_partial = log10_add(b_partial, static_cast<double>(h_done) * std::log10(1 / q.value().to_double()) +
                                           g.log10_shape(sd, h_done));
    }
    const double a_tail = g.log10_tail(rd, h) - rd * g.log10_qm1();
    const double b_tail = g.log10_tail(sd, h) - sd * g.log10_qm1();
    const double a_all = log10_add(a_partial, a_tail);
    const double b_all = log10_add(b_partial, b_tail);
    bound = lead + g.log10_shape_sup(td, first_uncut) + log10_add(a_tail + b_all, a_all + b_tail);
    const double summands = window == Window::triangular ? 0.5 * double(m) * double(m - 1) : double(m) * double(m);
    if (summands > static_cast<double>(cfg.max_terms)) fail_precision("tornheim_q", cfg.max_terms);
    if (bound <= goal) {
      size = m;
      break;
    }
  }

  const Precision p = cfg.working();
  const long uv_max = window == Window::triangular ? size - 1 : size;
  const long n_max = window == Window::triangular ? size : 2 * size;
  const std::vector<Real> w = inverse_shapes(q, n_max, p);
  const Real x = Real(1, p) / Real(q.value(), p);
  const Real qm1(q.value() - Rational(1), p);

  auto side = [&](const Rational& e, Sign sg) {
    std::vector<Real> out(static_cast<std::size_t>(uv_max + 1), Real(p));
    Real xn = pow(qm1, e);
    for (long n = 1; n <= uv_max; ++n) {
      xn *= x;
      out[n] = xn * pow(w[n], e);
      if (sg == Sign::minus && n % 2 == 1) out[n] = -out[n];
    }
    return out;
  };
  const std::vector<Real> alpha = side(r, sigma);
  const std::vector<Real> beta = side(s, tau);
  std::vector<Real> gamma(static_cast<std::size_t>(n_max + 1), Real(p));
  const Real gamma_scale = pow(qm1, t);
  for (long n = 2; n <= n_max; ++n) gamma[n] = gamma_scale * pow(w[n], t);

  return {kernels::diagonal_sum(alpha, beta, gamma, n_max, uv_max, backend), bound, size};
}

}  // namespace tornheim
