#include "tornheim/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tornheim::kernels {

namespace {

// Adds gamma[n] * (sum over the n-th anti-diagonal) into acc; scratch
// avoids reallocating temporaries in the hot loop.
void accumulate_diagonal(std::span<const Real> alpha, std::span<const Real> beta,
                         std::span<const Real> gamma, long n, long uv_max, Real& acc, Real& diag,
                         Real& pair, Real& tmp) {
  const long lo = std::max(1L, n - uv_max);
  const long hi = std::min(uv_max, n - 1);
  if (lo > hi) return;
  mpfr_set_zero(diag.get(), 1);
  for (long u = lo; u <= hi && u <= n - u; ++u) {
    const long v = n - u;
    if (u == v) {
      mpfr_mul(tmp.get(), alpha[u].get(), beta[v].get(), MPFR_RNDN);
      mpfr_add(diag.get(), diag.get(), tmp.get(), MPFR_RNDN);
    } else {
      mpfr_mul(pair.get(), alpha[u].get(), beta[v].get(), MPFR_RNDN);
      mpfr_mul(tmp.get(), alpha[v].get(), beta[u].get(), MPFR_RNDN);
      mpfr_add(pair.get(), pair.get(), tmp.get(), MPFR_RNDN);
      mpfr_add(diag.get(), diag.get(), pair.get(), MPFR_RNDN);
    }
  }
  mpfr_mul(tmp.get(), diag.get(), gamma[n].get(), MPFR_RNDN);
  mpfr_add(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
}

Precision widest(std::span<const Real> a, std::span<const Real> b, std::span<const Real> c) {
  mpfr_prec_t bits = MPFR_PREC_MIN;
  for (auto span : {a, b, c}) {
    if (span.size() > 1) bits = std::max(bits, span[1].precision().bits);
  }
  return {bits};
}

double signed_power(Sign s, long n) { return (s == Sign::minus && n % 2 != 0) ? -1.0 : 1.0; }

}  // namespace

Real diagonal_sum(std::span<const Real> alpha, std::span<const Real> beta, std::span<const Real> gamma,
                  long n_max, long uv_max, Backend backend) {
  const Precision p = widest(alpha, beta, gamma);
  if (backend == Backend::serial) {
    Real acc(p), diag(p), pair(p), tmp(p);
    for (long n = 2; n <= n_max; ++n) accumulate_diagonal(alpha, beta, gamma, n, uv_max, acc, diag, pair, tmp);
    return acc;
  }

  std::vector<Real> partials(static_cast<std::size_t>(max_threads()), Real(p));
#pragma omp parallel
  {
    Real acc(p), diag(p), pair(p), tmp(p);
    // cyclic assignment keeps the per-thread grouping deterministic and
    // balances the growing diagonal length
#pragma omp for schedule(static, 1)
    for (long n = 2; n <= n_max; ++n) accumulate_diagonal(alpha, beta, gamma, n, uv_max, acc, diag, pair, tmp);
#ifdef _OPENMP
    partials[static_cast<std::size_t>(omp_get_thread_num())] = acc;
#else
    partials[0] = acc;
#endif
  }
  Real total(p);
  for (const Real& part : partials) total += part;
  return total;
}

double naive_tornheim(long r, long s, long t, Sign sigma, Sign tau, long window, Backend backend) {
  auto row = [&](long u) {
    double acc = 0.0;
    const double su = signed_power(sigma, u) / std::pow(static_cast<double>(u), static_cast<double>(r));
    for (long v = window; v >= 1; --v) {
      acc += signed_power(tau, v) /
             (std::pow(static_cast<double>(v), static_cast<double>(s)) *
              std::pow(static_cast<double>(u + v), static_cast<double>(t)));
    }
    return su * acc;
  };
  double total = 0.0;
  if (backend == Backend::serial) {
    for (long u = window; u >= 1; --u) total += row(u);
    return total;
  }
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total)
  for (long u = window; u >= 1; --u) total += row(u);
  return total;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace tornheim::kernels
