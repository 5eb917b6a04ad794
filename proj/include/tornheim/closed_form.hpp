#pragma once

// Exact evaluation of double Euler sums of odd weight and, through their
// reduction, of the Tornheim series R, S, T of odd weight.

#include "tornheim/index.hpp"
#include "tornheim/reduction.hpp"
#include "tornheim/zeta_expression.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace tornheim {

/// Value given to zeta(0; -1) inside the parity formula. zeta(0; +1) is -1/2
/// under both; they differ only for the alternating series at 0.
enum class ZeroConvention {
  analytic,  // -1/2, the continuation of (2^{1-s} - 1) zeta(s)
  flipped,   // +1/2
};

std::string to_string(ZeroConvention c);

struct ProvenanceStep {
  std::string rule;
  std::string arguments;
  friend bool operator==(const ProvenanceStep&, const ProvenanceStep&) = default;
};

struct EvaluationResult {
  ZetaExpression expression;
  std::vector<ProvenanceStep> provenance;
  friend bool operator==(const EvaluationResult&, const EvaluationResult&) = default;
};

/// zeta(s, t; sigma, tau) over m > n > 0, s on the larger index.
/// Needs s + t odd, except zeta(s, 1) which is available for every s >= 2.
/// Throws DomainError for divergent input and UnsupportedError for even weight.
ZetaExpression double_euler_closed(const SignedIndex& first, const SignedIndex& second,
                                   ZeroConvention convention = ZeroConvention::analytic);

/// The same, recording which formula was used.
EvaluationResult double_euler_evaluate(const SignedIndex& first, const SignedIndex& second,
                                       ZeroConvention convention = ZeroConvention::analytic);

/// R, S or T(r, s, t) for odd r+s+t, as the sum of closed forms over the
/// classical reduction to double Euler sums.
EvaluationResult tornheim_closed(long r, long s, long t, Variant variant,
                                 ZeroConvention convention = ZeroConvention::analytic);

struct ReferenceValue {
  Variant variant;
  long r, s, t;
  ZetaExpression value;
};

/// Published closed forms the library must reproduce: the seven weight 3 and
/// 5 R values, S(5,5,5), S(7,7,7), and R(5,5,5), R(7,7,7), R(9,9,9).
const std::vector<ReferenceValue>& reference_values();

void to_json(nlohmann::json& j, const EvaluationResult& r);
void from_json(const nlohmann::json& j, EvaluationResult& r);

}  // namespace tornheim
