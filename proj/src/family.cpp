#include "fujimoto/family.hpp"

#include <numeric>

#include "fujimoto/combinations.hpp"
#include "fujimoto/combinatorics.hpp"
#include "fujimoto/gamma0.hpp"
#include "fujimoto/parallel.hpp"

namespace fujimoto {

FamilyParams FamilyParams::from_m(int m) {
    if (m < 2 || m % 2 != 0) {
        throw PreconditionError("m must be an even integer >= 2, got " + std::to_string(m));
    }
    return {m, m / 2};
}

namespace {

void check_params(const FamilyParams& p) {
    if (p.m < 2 || p.m % 2 != 0 || p.t * 2 != p.m) {
        throw PreconditionError("invalid family parameters m=" + std::to_string(p.m) + ", t=" +
                                std::to_string(p.t));
    }
}

IntPolynomial z_power_times_shift(unsigned a, unsigned b) {
    const BigInt one = 1;
    return IntPolynomial::monomial(a, one) * IntPolynomial::linear_power(one, b, one);
}

template <class Poly>
ExactMatrix coefficients_of(const std::vector<Poly>& polys, std::size_t width) {
    ExactMatrix out(polys.size(), width);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto& c = polys[i].coefficients();
        if (c.size() > width) {
            throw PreconditionError("polynomial " + std::to_string(i + 1) + " has degree " +
                                    std::to_string(c.size() - 1) + ", needs < " + std::to_string(width));
        }
        for (std::size_t s = 0; s < c.size(); ++s) {
            out(i, s) = Rational(c[s]);
        }
    }
    return out;
}

} // namespace

std::vector<IntPolynomial> family_polys(const FamilyParams& p) {
    check_params(p);
    const int t = p.t;
    std::vector<IntPolynomial> out;
    out.reserve(static_cast<std::size_t>(3 * t));
    for (int i = 1; i <= t; ++i) {
        out.push_back(z_power_times_shift(static_cast<unsigned>(i - 1), 0));
    }
    for (int i = t + 1; i <= 2 * t; ++i) {
        out.push_back(z_power_times_shift(0, static_cast<unsigned>(i - 1)));
    }
    for (int i = 2 * t + 1; i <= 3 * t; ++i) {
        out.push_back(z_power_times_shift(static_cast<unsigned>(i - t - 1), static_cast<unsigned>(p.m - i + t)));
    }
    return out;
}

ExactMatrix coefficient_matrix(const std::vector<IntPolynomial>& polys, std::size_t width) {
    return coefficients_of(polys, width);
}

ExactMatrix coefficient_matrix(const std::vector<RatPolynomial>& polys, std::size_t width) {
    return coefficients_of(polys, width);
}

ExactMatrix block_M1(int t) {
    ExactMatrix b(static_cast<std::size_t>(t), static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j) b(i - 1, j - 1) = Rational(binomial(t + i - 1, j - 1));
    return b;
}

ExactMatrix block_M2(int t) {
    ExactMatrix b(static_cast<std::size_t>(t), static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j) b(i - 1, j - 1) = Rational(binomial(t + i - 1, t + j - 1));
    return b;
}

ExactMatrix block_M3(int t) {
    ExactMatrix b(static_cast<std::size_t>(t), static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j) b(i - 1, j - 1) = Rational(binomial(t - i, j - i));
    return b;
}

ExactMatrix build_M(const FamilyParams& p) {
    check_params(p);
    const auto t = static_cast<std::size_t>(p.t);
    const ExactMatrix m1 = block_M1(p.t), m2 = block_M2(p.t), m3 = block_M3(p.t);
    ExactMatrix out(2 * t, 2 * t);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) {
            out(i, j) = m1(i, j);
            out(i, t + j) = m2(i, j);
            out(t + i, t + j) = m3(i, j);
        }
    }
    return out;
}

std::tuple<Rational, Rational, Rational> block_determinants(const FamilyParams& p) {
    check_params(p);
    return {determinant(block_M1(p.t)), determinant(block_M2(p.t)), determinant(block_M3(p.t))};
}

std::vector<int> default_left_signs(const FamilyParams& p) {
    check_params(p);
    std::vector<int> s;
    for (int i = 1; i <= p.t; ++i) s.push_back(i % 2 == 0 ? 1 : -1);
    for (int i = 1; i <= p.t; ++i) s.push_back((p.t + i) % 2 == 0 ? 1 : -1);
    for (int i = 1; i <= p.t; ++i) s.push_back(1);
    return s;
}

std::vector<int> default_right_signs(const FamilyParams& p) {
    check_params(p);
    std::vector<int> s;
    for (int i = 1; i <= p.t; ++i) s.push_back(i % 2 == 0 ? 1 : -1);
    for (int i = 1; i <= p.t; ++i) s.push_back((p.t + i) % 2 == 0 ? 1 : -1);
    return s;
}

ExactMatrix sign_factorization_product(const FamilyParams& p, const std::vector<int>& left,
                                       const std::vector<int>& right) {
    check_params(p);
    const auto t = static_cast<std::size_t>(p.t);
    if (left.size() != 3 * t || right.size() != 2 * t) {
        throw PreconditionError("sign vectors must have lengths 3t and 2t");
    }
    const ExactMatrix blocks = build_M(p);
    ExactMatrix middle(3 * t, 2 * t);
    for (std::size_t i = 0; i < t; ++i) middle(i, i) = Rational(1);
    for (std::size_t i = 0; i < 2 * t; ++i)
        for (std::size_t j = 0; j < 2 * t; ++j) middle(t + i, j) = blocks(i, j);
    for (std::size_t i = 0; i < 3 * t; ++i)
        for (std::size_t j = 0; j < 2 * t; ++j) middle(i, j) *= Rational(left[i] * right[j]);
    return middle;
}

bool sign_factorization_check(const FamilyParams& p, const std::vector<int>& left,
                              const std::vector<int>& right) {
    return sign_factorization_product(p, left, right) ==
           coefficient_matrix(family_polys(p), static_cast<std::size_t>(p.m));
}

bool sign_factorization_check(const FamilyParams& p) {
    return sign_factorization_check(p, default_left_signs(p), default_right_signs(p));
}

bool verify_network_equals_M(const FamilyParams& p) {
    return weight_matrix(build_gamma0(omega0(p.m))) == build_M(p);
}

GeneralPositionReport general_position(const FamilyParams& p, const ScanMode& mode, const ScanOptions& options,
                                       std::uint64_t budget) {
    check_params(p);
    if (!mode.is_sampled()) {
        const BigInt total = binomial(3 * p.t, p.m);
        if (total > BigInt(static_cast<unsigned long>(budget))) {
            throw BudgetError("exhaustive scan over C(" + std::to_string(3 * p.t) + ", " + std::to_string(p.m) +
                              ") = " + total.get_str() + " subsets exceeds the budget of " +
                              std::to_string(budget) + "; use sampled mode with a seed");
        }
    }
    return maximal_minor_scan(coefficient_matrix(family_polys(p), static_cast<std::size_t>(p.m)), mode, options);
}

PositiveMinorReport positive_minor_scan(const FamilyParams& p, bool with_witnesses, bool keep_all,
                                        std::uint64_t budget, unsigned threads) {
    check_params(p);
    const int m = p.m;
    const int t = p.t;
    BigInt count = 0;
    for (int k = 0; k <= t; ++k) count += binomial(t, k) * binomial(m, t + k);
    if (count > BigInt(static_cast<unsigned long>(budget))) {
        throw BudgetError("positive minor scan needs " + count.get_str() + " minors, over the budget");
    }

    std::vector<MinorQuery> queries;
    for (int k = 0; k <= t; ++k) {
        std::vector<int> extra(static_cast<std::size_t>(k));
        std::iota(extra.begin(), extra.end(), 0);
        do {
            std::vector<int> cols;
            for (int c : extra) cols.push_back(c + 1);
            for (int c = t + 1; c <= m; ++c) cols.push_back(c);
            const int size = static_cast<int>(cols.size());
            std::vector<int> rows(static_cast<std::size_t>(size));
            std::iota(rows.begin(), rows.end(), 0);
            do {
                MinorQuery q{{}, cols};
                for (int r : rows) q.rows.push_back(r + 1);
                queries.push_back(std::move(q));
            } while (next_combination(rows, m));
        } while (next_combination(extra, t));
    }

    const ExactMatrix big_m = build_M(p);
    const PlanarNetwork net = build_gamma0(omega0(m));
    std::vector<PositiveMinor> results(queries.size());
    parallel_for(queries.size(), threads ? threads : default_thread_count(), [&](std::size_t idx) {
        PositiveMinor& r = results[idx];
        r.query = queries[idx];
        r.value = minor(big_m, r.query);
        if (with_witnesses) {
            r.witness = find_positive_collection(net, r.query);
        }
    });

    PositiveMinorReport report;
    report.m = m;
    report.witnesses_requested = with_witnesses;
    report.minors_checked = results.size();
    for (auto& r : results) {
        if (r.witness) ++report.witnesses_found;
        if (r.value.sign() <= 0 || (with_witnesses && !r.witness)) {
            report.failures.push_back(r);
        }
        if (keep_all) report.minors.push_back(std::move(r));
    }
    return report;
}

} // namespace fujimoto
