#include "tornheim/numeric.hpp"

#include "tornheim/bernoulli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace tornheim {

namespace {

// Where the asymptotic tail expansions are anchored. Successive expansion
// terms shrink roughly like (s+k)/(pi n), so n ~ 2x the working digits
// reaches the working precision well before the expansion turns around.
long anchor(const PrecisionConfig& cfg) { return 2L * cfg.working_digits() + 20; }

struct TailTerm {
  Real coeff;
  long offset;  // contributes coeff * n^{-s-offset}
};

// sum_{m>n} sigma^m m^{-s} ~ rho(n) n^{-s} sum_j coeff_j n^{-offset_j},
// rho(n) = 1 for sigma = +1 (Euler-Maclaurin) and (-1)^n for sigma = -1
// (Boole summation). Truncated once a term falls below the working
// precision relative to the leading term, so the tail carries full
// relative accuracy; for larger n the dropped part is smaller still.
std::vector<TailTerm> tail_expansion(const Real& s, Sign sigma, long n, const PrecisionConfig& cfg) {
  const Precision p = cfg.working();
  const double log_n = std::log10(static_cast<double>(n));
  std::vector<TailTerm> out;
  double previous = std::numeric_limits<double>::infinity();
  double cutoff = 0;

  auto accept = [&](Real coeff, long offset) {
    const double size = coeff.log10_abs() - static_cast<double>(offset) * log_n;
    if (size < cutoff) return false;
    if (size > previous && out.size() > 3) {
      throw PrecisionError("tail expansion at n = " + std::to_string(n) + " diverges before reaching " +
                           std::to_string(cfg.working_digits()) + " digits");
    }
    previous = size;
    out.push_back({std::move(coeff), offset});
    return true;
  };

  if (sigma == Sign::plus) {
    out.push_back({Real(1, p) / (s - Real(1, p)), -1});
    out.push_back({Real(Rational(-1, 2), p), 0});
    cutoff = std::max(out[0].coeff.log10_abs() + log_n, 0.0) - (cfg.working_digits() + 5.0);
    Real rising = s;  // (s)_{2j-1}
    for (long j = 1;; ++j) {
      const Rational b = bernoulli(2 * j) / factorial(2 * j);
      if (!accept(Real(b, p) * rising, 2 * j - 1)) break;
      rising *= (s + Real(2 * j - 1, p));
      rising *= (s + Real(2 * j, p));
    }
  } else {
    out.push_back({Real(Rational(-1, 2), p), 0});
    cutoff = -(cfg.working_digits() + 5.0);
    Real rising = s;  // (s)_k
    for (long k = 1;; k += 2) {
      const Rational c = (pow(Rational(2), k + 1) - Rational(1)) * bernoulli(k + 1) / factorial(k + 1);
      if (!accept(Real(c, p) * rising, k)) break;
      rising *= (s + Real(k, p));
      rising *= (s + Real(k + 1, p));
    }
  }
  return out;
}

Real evaluate_tail(const std::vector<TailTerm>& terms, const Real& s, Sign sigma, long n, Precision p) {
  const Real nn(n, p);
  const Real inv = Real(1, p) / nn;
  Real acc(p);
  // offsets ascend from -1 or 0; walk a running power of 1/n
  Real power = nn;  // n^{1}
  long current = -1;
  for (const auto& term : terms) {
    while (current < term.offset) {
      power *= inv;
      ++current;
    }
    acc += term.coeff * power;
  }
  acc *= pow(nn, -s);
  if (sigma == Sign::minus && n % 2 == 1) acc = -acc;
  return acc;
}

Real inverse_power(long n, long s, Precision p) { return pow(Real(n, p), -s); }

}  // namespace

Real power_tail(const Real& s, Sign sigma, long n, const PrecisionConfig& cfg) {
  if (sigma == Sign::plus && !(s > Real(1, s.precision()))) {
    throw DomainError("tail of sum m^{-s} diverges for s <= 1");
  }
  return evaluate_tail(tail_expansion(s, sigma, n, cfg), s, sigma, n, cfg.working());
}

Real classical_zeta(const Real& s, const PrecisionConfig& cfg) {
  const Precision p = cfg.working();
  if (!(s > Real(1, p))) throw DomainError("zeta(s) needs s > 1");
  const long n = anchor(cfg);
  Real acc = power_tail(s, Sign::plus, n, cfg);
  for (long m = n; m >= 1; --m) acc += pow(Real(m, p), -s);
  return acc;
}

Real classical_zeta(const SignedIndex& k, const PrecisionConfig& cfg) {
  const Precision p = cfg.working();
  if (k.sign == Sign::plus) {
    if (k.value < 2) throw DomainError("zeta(" + std::to_string(k.value) + ") diverges; s > 1 violated");
    return classical_zeta(Real(k.value, p), cfg);
  }
  if (k.value < 1) throw DomainError("zeta(bar k) needs k >= 1");
  if (k.value == 1) return -Real::ln2(p);
  const Real factor = pow(Real(2, p), 1 - k.value) - Real(1, p);
  return factor * classical_zeta(Real(k.value, p), cfg);
}

SeriesEstimate classical_double_euler(const SignedIndex& outer, const SignedIndex& inner,
                                      const PrecisionConfig& cfg) {
  cfg.validate();
  if (outer.sign == Sign::plus && outer.value < 2) {
    throw DomainError("double Euler sum diverges: leading index " + to_string(outer) + " needs s1 >= 2");
  }
  if (outer.value < 1) throw DomainError("leading index must be >= 1");
  if (inner.value < 1) throw DomainError("second index must be >= 1");

  const Precision p = cfg.working();
  const long n_cut = anchor(cfg);
  const Real s1(outer.value, p);

  // sum_n sigma2^n n^{-s2} T(n), T(n) = sum_{m>n} sigma1^m m^{-s1}.
  const std::vector<TailTerm> inner_tail = tail_expansion(s1, outer.sign, n_cut, cfg);
  Real tail = evaluate_tail(inner_tail, s1, outer.sign, n_cut, p);
  Real acc(p);
  for (long n = n_cut; n >= 1; --n) {
    Real term = inverse_power(n, inner.value, p) * tail;
    if (inner.sign == Sign::minus && n % 2 == 1) term = -term;
    acc += term;
    Real step = inverse_power(n, outer.value, p);
    if (outer.sign == Sign::minus && n % 2 == 1) step = -step;
    tail += step;
  }

  // n > n_cut: expand T(n) and sum each power against sigma2^n n^{-s2}.
  const Sign combined = outer.sign * inner.sign;
  for (const auto& term : inner_tail) {
    const Real exponent(outer.value + inner.value + term.offset, p);
    acc += term.coeff * power_tail(exponent, combined, n_cut, cfg);
  }
  return {acc, -(cfg.working_digits() + 3.0), n_cut};
}

Real expr_numeric(const ZetaExpression& e, const PrecisionConfig& cfg) {
  const Precision p = cfg.working();
  const Real pi = Real::pi(p);
  const Real ln2 = Real::ln2(p);
  std::map<int, Real> zetas;
  Real acc(p);
  for (const auto& [m, c] : e.terms()) {
    Real term(c, p);
    if (m.pi_exponent > 0) term *= pow(pi, static_cast<long>(m.pi_exponent));
    if (m.log2_exponent > 0) term *= pow(ln2, static_cast<long>(m.log2_exponent));
    for (int k : m.odd_zeta_factors) {
      auto it = zetas.find(k);
      if (it == zetas.end()) it = zetas.emplace(k, classical_zeta(plain(k), cfg)).first;
      term *= it->second;
    }
    acc += term;
  }
  return acc;
}

std::string render(const Real& x, const PrecisionConfig& cfg) { return x.to_string(cfg.digits); }

}  // namespace tornheim
