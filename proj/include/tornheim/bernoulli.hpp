#pragma once

#include "tornheim/rational.hpp"

namespace tornheim {

/// B_n with B_1 = -1/2. Exact; memoized behind a mutex, so safe to call
/// from several threads.
Rational bernoulli(long n);

}  // namespace tornheim
