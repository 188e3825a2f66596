#pragma once

#include <cstdint>

#include "fujimoto/errors.hpp"
#include "fujimoto/rational.hpp"

namespace fujimoto {

/// Binomial coefficient on all integer pairs. Zero for k < 0 and for
/// k > n >= 0; for n < 0 and k >= 0 this is the generalized value
/// (-1)^k * C(k - n - 1, k).
BigInt binomial(long n, long k);

/// Same as binomial() but in machine words; throws std::overflow_error if
/// the value does not fit.
std::uint64_t binomial_u64(unsigned n, unsigned k);

struct PochhammerQuery {
    Rational base;
    unsigned length = 0;
};

/// Rising factorial base (base + 1) ... (base + length - 1); 1 when length = 0.
Rational pochhammer(const PochhammerQuery& q);
inline Rational pochhammer(const Rational& base, unsigned length) {
    return pochhammer(PochhammerQuery{base, length});
}

BigInt factorial(unsigned n);

struct SaalschuetzResult {
    bool holds = false;
    Rational lhs;
    Rational rhs;
};

/// Evaluates both sides of the terminating balanced 3F2 identity
///
///   sum_{s=0}^{a} (1)_s (-k-a-2b+1)_s (-a)_s / ((-a-b+1)_s (-k-a-b+2)_s s!)
///       = (k+a+b-1)(a+b) / ((k+b-1) b)
///
/// that drives the induction step for the lattice weight sums. Requires
/// a >= 0, b >= 1, k >= 1; throws PreconditionError if a denominator
/// factor vanishes.
SaalschuetzResult saalschuetz_check(long a, long b, long k);

} // namespace fujimoto
