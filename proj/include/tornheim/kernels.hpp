#pragma once

// Data-parallel inner loops of the double-series evaluations. Each kernel
// has a serial reference and an OpenMP version; they sum the same terms
// but may differ in the last bits because partial sums are grouped per
// thread.

#include "tornheim/index.hpp"
#include "tornheim/real.hpp"

#include <span>

namespace tornheim::kernels {

enum class Backend { serial, parallel };

/// sum_{n=2}^{n_max} gamma[n] * sum_{u+v=n, 1<=u,v<=uv_max} alpha[u] beta[v].
///
/// Arrays are indexed from 1 (slot 0 is ignored): alpha and beta need
/// min(uv_max, n_max-1)+1 entries, gamma needs n_max+1. Within a diagonal
/// the products for u and n-u are added as a pair, so swapping alpha and
/// beta gives a bit-identical result.
Real diagonal_sum(std::span<const Real> alpha, std::span<const Real> beta, std::span<const Real> gamma,
                  long n_max, long uv_max, Backend backend);

/// sum_{u,v=1}^{window} sigma^u tau^v / (u^r v^s (u+v)^t) in double precision.
/// Only good as a coarse sanity check of the classical series.
double naive_tornheim(long r, long s, long t, Sign sigma, Sign tau, long window, Backend backend);

/// Threads the parallel backend will use (1 when built without OpenMP).
int max_threads();

}  // namespace tornheim::kernels
