#pragma once

// Partial-fraction expansion of 1/([u]^r [v]^s) and the reductions of the
// signed q-Tornheim series T, S, R to double q-Euler sums that follow from
// it. Reductions are explicit term lists: the exact evaluator, the numeric
// verifier and the CLI printer all consume the same object.

#include "tornheim/index.hpp"
#include "tornheim/precision.hpp"
#include "tornheim/rational.hpp"
#include "tornheim/real.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace tornheim {

/// T: no signs; S: (-1)^{u+v}; R: (-1)^v.
enum class Variant { T, S, R };

struct VariantSigns {
  Sign sigma;  // on u
  Sign tau;    // on v
};

VariantSigns signs_of(Variant v);
/// Inverse of signs_of; (-, +) has no named variant and is rejected.
Variant variant_of(Sign sigma, Sign tau);
std::string to_string(Variant v);
Variant parse_variant(const std::string& text);

/// Which sum of the expansion a term came from: the [u]-denominator
/// family, its mirror in v, or the pure [u+v] correction family.
enum class Family { A, B, C };

struct DoubleQZeta {
  SignedExponent outer;  // on the larger summation index
  SignedExponent inner;
  int one_minus_q_pow = 0;
  friend bool operator==(const DoubleQZeta&, const DoubleQZeta&) = default;
};

struct PhiTerm {
  SignedExponent index;
  int one_minus_q_pow = 0;
  friend bool operator==(const PhiTerm&, const PhiTerm&) = default;
};

/// (1-q)^a (1+q)^b zeta_{q^2}[index]; b = j - r - s - t may be negative or fractional.
struct QSquaredZeta {
  Rational index;
  int one_minus_q_pow = 0;
  Rational one_plus_q_pow;
  friend bool operator==(const QSquaredZeta&, const QSquaredZeta&) = default;
};

using QTermKind = std::variant<DoubleQZeta, PhiTerm, QSquaredZeta>;

struct ReductionTerm {
  Rational coefficient;
  QTermKind kind;
  Family family = Family::A;
  friend bool operator==(const ReductionTerm&, const ReductionTerm&) = default;
};

struct Reduction {
  Variant variant = Variant::T;
  long r = 1;
  long s = 1;
  Rational t;
  std::vector<ReductionTerm> terms;
  friend bool operator==(const Reduction&, const Reduction&) = default;
};

/// Index sum of a term plus its power of (1-q); equals r+s+t for every term.
Rational term_weight(const ReductionTerm& term);

// ---- partial fractions -----------------------------------------------------

/// coefficient (1-q)^c q^{a u + b v} / ([u]^i [v]^j [u+v]^k).
struct PartialFractionTerm {
  Rational coefficient;
  long q_power_u = 0;
  long q_power_v = 0;
  int denom_u_pow = 0;
  int denom_v_pow = 0;
  int denom_uv_pow = 0;
  int one_minus_q_pow = 0;
  Family family = Family::A;
};

/// The three families expanding 1/([u]^r [v]^s), in (a, b) then j order.
std::vector<PartialFractionTerm> lemma1_expand(long r, long s);

/// [n]_q as an exact rational.
Rational q_int_exact(long n, const Rational& q);

Rational evaluate_partial_fractions(const std::vector<PartialFractionTerm>& terms, long u, long v,
                                    const Rational& q);

/// Exact check that the given terms sum to 1/([u]^r [v]^s).
bool verify_partial_fractions(const std::vector<PartialFractionTerm>& terms, long r, long s, long u, long v,
                              const Rational& q);

bool verify_lemma1(long r, long s, long u, long v, const Rational& q);

// ---- reductions ------------------------------------------------------------

/// T[r,s,t; sigma,tau] as double q-Euler sums plus phi or zeta_{q^2} corrections.
/// r, s >= 1; t any rational.
Reduction theorem1_reduce(long r, long s, const Rational& t, Variant variant);

enum class ProductVariant { TT, SS, TS };

/// zeta_q[r] zeta_q[s] (TT), zeta_q[bar r] zeta_q[bar s] (SS), zeta_q[r] zeta_q[bar s] (TS):
/// the t = 0 reduction.
Reduction product_decompose(long r, long s, ProductVariant variant);

/// Coefficient of the (a, b) term in the product decomposition when written
/// as C(a+s-1, s-1) C(s-1, b) instead of as a trinomial.
Rational product_coefficient(long a, long b, long s);

struct ClassicalTerm {
  Rational coefficient;
  SignedIndex first;
  SignedIndex second;
  friend bool operator==(const ClassicalTerm&, const ClassicalTerm&) = default;
};

/// The q -> 1 limit: T, S or R(r, s, t) as a combination of double Euler sums.
/// Throws DomainError naming every violated convergence inequality.
std::vector<ClassicalTerm> corollary1_reduce(long r, long s, long t, Variant variant);

/// Numeric value of a reduction's right-hand side.
Real evaluate(const Reduction& reduction, const QParam& q, const PrecisionConfig& cfg);

/// Numeric value of the series a reduction rewrites, by direct double summation.
Real evaluate_lhs(const Reduction& reduction, const QParam& q, const PrecisionConfig& cfg);

/// Sum of coefficient * zeta(first, second) with numeric double Euler sums.
Real evaluate(const std::vector<ClassicalTerm>& terms, const PrecisionConfig& cfg);

/// One term per line, families in order, e.g. "  - 1 * (1-q) * phi[2]".
std::string to_string(const Reduction& reduction);
std::string to_string(const std::vector<ClassicalTerm>& terms);

void to_json(nlohmann::json& j, const Reduction& r);
void from_json(const nlohmann::json& j, Reduction& r);

}  // namespace tornheim
