#pragma once

// Brute-force high-precision summation of every series the library knows
// about. These are the independent side of every symbolic identity check.
//
// q-series converge geometrically for q > 1 whatever the (real) exponents,
// since each summand is (q-1)^s q^{-n} (1 - q^{-n})^{-s} in magnitude; all
// truncation points come from explicit bounds of that form.

#include "tornheim/index.hpp"
#include "tornheim/kernels.hpp"
#include "tornheim/precision.hpp"
#include "tornheim/rational.hpp"
#include "tornheim/real.hpp"
#include "tornheim/zeta_expression.hpp"

namespace tornheim {

// ---- q-analogs -------------------------------------------------------------

/// [n]_q = (q^n - 1)/(q - 1).
Real q_int(long n, const QParam& q, Precision p);

/// zeta_q[s; sigma] = sum_{n>=1} sigma^n q^{(s-1)n} / [n]_q^s.
SeriesEstimate q_zeta1(const Rational& s, Sign sigma, const QParam& q, const PrecisionConfig& cfg);

/// zeta_q[s1, s2; sigma1, sigma2] over m > n > 0 (s1 on the larger index).
SeriesEstimate q_zeta2(const SignedExponent& outer, const SignedExponent& inner, const QParam& q,
                       const PrecisionConfig& cfg);

/// The same double sum cut at m <= truncation, no tail bound.
Real q_zeta2_truncated(const SignedExponent& outer, const SignedExponent& inner, const QParam& q,
                       long truncation, Precision p);

/// phi[s; sigma] = sum_{n>=1} (n-1) sigma^n q^{(s-1)n} / [n]_q^s.
SeriesEstimate phi_q(const Rational& s, Sign sigma, const QParam& q, const PrecisionConfig& cfg);

enum class Window { triangular, square };

/// T[r,s,t; sigma,tau] = sum_{u,v>=1} sigma^u tau^v q^{(r+t-1)u+(s+t-1)v} / ([u]^r [v]^s [u+v]^t).
/// The triangular window keeps u+v <= terms; the square one u,v <= terms.
SeriesEstimate tornheim_q(const Rational& r, const Rational& s, const Rational& t, Sign sigma, Sign tau,
                          const QParam& q, const PrecisionConfig& cfg, Window window = Window::triangular,
                          kernels::Backend backend = kernels::Backend::parallel);

// ---- classical series ------------------------------------------------------

/// Riemann zeta for real s > 1, by Euler-Maclaurin.
Real classical_zeta(const Real& s, const PrecisionConfig& cfg);

/// zeta(k) or zeta(bar k); the barred value is (2^{1-k} - 1) zeta(k), or -log 2 at k = 1.
Real classical_zeta(const SignedIndex& k, const PrecisionConfig& cfg);

/// sum_{m > n} sigma^m m^{-s}, from its Euler-Maclaurin (sigma = +1) or
/// Boole (sigma = -1) asymptotic expansion at n. Needs n large against the
/// working digits; throws PrecisionError when the expansion stalls.
Real power_tail(const Real& s, Sign sigma, long n, const PrecisionConfig& cfg);

/// zeta(s1, s2; sigma1, sigma2) = sum_{m>n>0} sigma1^m m^{-s1} sigma2^n n^{-s2}.
SeriesEstimate classical_double_euler(const SignedIndex& outer, const SignedIndex& inner,
                                      const PrecisionConfig& cfg);

/// Numeric value of an exact expression; absolute error ~ 10^{-working digits}.
Real expr_numeric(const ZetaExpression& e, const PrecisionConfig& cfg);

/// Renders with cfg.digits significant digits (truncated).
std::string render(const Real& x, const PrecisionConfig& cfg);

}  // namespace tornheim
