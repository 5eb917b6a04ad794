#pragma once

// Sweeps that check every identity two independent ways. Cases run
// concurrently; results come back in case order.

#include "tornheim/closed_form.hpp"
#include "tornheim/kernels.hpp"
#include "tornheim/precision.hpp"
#include "tornheim/rational.hpp"
#include "tornheim/reduction.hpp"

#include <string>
#include <vector>

namespace tornheim {

struct CaseResult {
  std::string name;
  bool passed = false;
  double residual_log10 = 0;  // log10 |lhs - rhs|; -inf for exact agreement
  std::string detail;
};

struct SweepReport {
  std::string family;
  std::vector<CaseResult> cases;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

/// 10^{-(digits-3)}, as log10.
double default_tolerance_log10(const PrecisionConfig& cfg);

/// Exact rational check for r, s in [1, max_rs], u, v in [1, max_uv].
SweepReport verify_lemma1_sweep(long max_rs, long max_uv, const std::vector<Rational>& qs,
                                kernels::Backend backend = kernels::Backend::parallel);

/// Direct double summation against the evaluated reduction, all three variants.
SweepReport verify_theorem1_sweep(long max_rs, const std::vector<Rational>& ts, const std::vector<Rational>& qs,
                                  const PrecisionConfig& cfg, double tolerance_log10,
                                  kernels::Backend backend = kernels::Backend::parallel);

/// Closed forms against summed double Euler sums for odd weight in [1, max]^3.
SweepReport verify_corollary1_sweep(long max, const PrecisionConfig& cfg, double tolerance_log10,
                                    ZeroConvention convention = ZeroConvention::analytic,
                                    kernels::Backend backend = kernels::Backend::parallel);

/// zeta_q[r] zeta_q[s] and its two signed forms against their decompositions.
SweepReport verify_products_q(long max_rs, const std::vector<Rational>& qs, const PrecisionConfig& cfg,
                              double tolerance_log10, kernels::Backend backend = kernels::Backend::parallel);

/// The q -> 1 product decompositions with each identity's own hypotheses,
/// r, s in [1, max_rs] where admissible.
SweepReport verify_products_classical(long max_rs, const PrecisionConfig& cfg, double tolerance_log10,
                                      kernels::Backend backend = kernels::Backend::parallel);

/// Reference values: exact equality of the closed form, then a numeric check.
SweepReport verify_reference_table(const PrecisionConfig& cfg, double tolerance_log10,
                                   ZeroConvention convention = ZeroConvention::analytic,
                                   kernels::Backend backend = kernels::Backend::parallel);

/// A user-supplied expression for R, S or T(r, s, t) against the numeric value.
CaseResult verify_expression(Variant variant, long r, long s, long t, const ZetaExpression& claimed,
                             const PrecisionConfig& cfg, double tolerance_log10);

/// Numeric R, S or T(r, s, t) through the classical reduction.
Real tornheim_numeric(Variant variant, long r, long s, long t, const PrecisionConfig& cfg);

}  // namespace tornheim
