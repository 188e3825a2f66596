#include "fujimoto/combinatorics.hpp"

#include <string>

namespace fujimoto {

BigInt binomial(long n, long k) {
    if (k < 0) {
        return 0;
    }
    if (n >= 0) {
        if (k > n) {
            return 0;
        }
        BigInt r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    // C(n, k) = (-1)^k C(k - n - 1, k) for n < 0.
    BigInt r = binomial(k - n - 1, k);
    return (k % 2 == 0) ? r : BigInt(-r);
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    BigInt r = binomial(n, k);
    if (!r.fits_ulong_p()) {
        throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                  ") exceeds 64 bits");
    }
    return r.get_ui();
}

Rational pochhammer(const PochhammerQuery& q) {
    Rational acc(1);
    Rational factor = q.base;
    for (unsigned s = 0; s < q.length; ++s) {
        acc *= factor;
        factor += Rational(1);
    }
    return acc;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

SaalschuetzResult saalschuetz_check(long a, long b, long k) {
    if (a < 0 || b < 1 || k < 1) {
        throw PreconditionError("saalschuetz_check requires a >= 0, b >= 1, k >= 1");
    }
    const Rational top2(-k - a - 2 * b + 1);
    const Rational top3(-a);
    const Rational bot1(-a - b + 1);
    const Rational bot2(-k - a - b + 2);

    // Denominator factors for s <= a are bot1 + r and bot2 + r with r < a.
    for (long r = 0; r < a; ++r) {
        if ((bot1 + Rational(r)).is_zero() || (bot2 + Rational(r)).is_zero()) {
            throw PreconditionError("vanishing Pochhammer denominator at a=" + std::to_string(a) +
                                    ", b=" + std::to_string(b) + ", k=" + std::to_string(k));
        }
    }

    Rational lhs;
    for (long s = 0; s <= a; ++s) {
        const auto len = static_cast<unsigned>(s);
        Rational term = pochhammer(Rational(1), len) * pochhammer(top2, len) * pochhammer(top3, len);
        term /= pochhammer(bot1, len) * pochhammer(bot2, len) * Rational(factorial(len));
        lhs += term;
    }

    const Rational rhs = Rational((k + a + b - 1) * (a + b)) / Rational((k + b - 1) * b);
    return {lhs == rhs, lhs, rhs};
}

} // namespace fujimoto
