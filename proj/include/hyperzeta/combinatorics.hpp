#pragma once

#include "hyperzeta/rational.hpp"

namespace hyperzeta {

/// Bernoulli number B_m as an exact rational.
///
/// Convention: B_1 = -1/2 (the generating function t/(e^t - 1)). Nothing in
/// the library consumes odd indices, so the B_1 sign never reaches a result.
/// Even indices come from the integer tangent-number recurrence and are
/// memoized; the table is prefilled through B_40 and grows on demand. Safe
/// for concurrent callers.
Rational bernoulli(unsigned m);

/// C(n, k); zero for k < 0 or k > n.
Rational binomial(long n, long k);

/// Γ(n/2) = (n/2 - 1)! for even n >= 2. Odd n throws std::invalid_argument.
Rational half_gamma(long n);

/// n! for n >= 0.
Rational factorial(long n);

}  // namespace hyperzeta
