#include "tornheim/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace tornheim {

namespace {

// sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1.
class BernoulliTable {
 public:
  Rational get(long n) {
    std::lock_guard lock(mutex_);
    if (values_.empty()) values_.push_back(Rational(1));
    while (static_cast<long>(values_.size()) <= n) extend();
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  void extend() {
    const long n = static_cast<long>(values_.size());
    if (n >= 3 && n % 2 == 1) {
      values_.push_back(Rational(0));
      return;
    }
    mpz_class binom = 1;  // C(n+1, k), updated incrementally
    mpq_class acc = 0;
    for (long k = 0; k < n; ++k) {
      acc += binom * values_[static_cast<std::size_t>(k)].get();
      binom = binom * (n + 1 - k) / (k + 1);
    }
    // binom now equals C(n+1, n) = n+1
    values_.push_back(Rational(mpq_class(-acc / binom)));
  }

  std::mutex mutex_;
  std::vector<Rational> values_;
};

}  // namespace

Rational bernoulli(long n) {
  if (n < 0) throw std::domain_error("bernoulli index must be nonnegative");
  static BernoulliTable table;
  return table.get(n);
}

}  // namespace tornheim
