#pragma once

// Independent reference implementations used to cross-check the library.

#include <map>
#include <random>
#include <vector>

#include "fujimoto/exact_matrix.hpp"
#include "fujimoto/planar_network.hpp"
#include "fujimoto/polynomial.hpp"

namespace oracle {

using fujimoto::BigInt;
using fujimoto::ExactMatrix;
using fujimoto::Rational;

/// Laplace expansion along the first row.
inline Rational cofactor_det(const ExactMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return a(0, 0);
    Rational total;
    for (std::size_t c = 0; c < n; ++c) {
        if (a(0, c).is_zero()) continue;
        std::vector<int> rows, cols;
        for (std::size_t r = 1; r < n; ++r) rows.push_back(static_cast<int>(r));
        for (std::size_t k = 0; k < n; ++k)
            if (k != c) cols.push_back(static_cast<int>(k));
        const Rational term = a(0, c) * cofactor_det(a.submatrix(rows, cols));
        total = c % 2 == 0 ? total + term : total - term;
    }
    return total;
}

/// Binomial by Pascal's rule with the k > n >= 0 and k < 0 conventions.
inline BigInt pascal(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    static std::map<std::pair<long, long>, BigInt> memo;
    if (k == 0 || k == n) return 1;
    const auto key = std::make_pair(n, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt v = pascal(n - 1, k - 1) + pascal(n - 1, k);
    memo.emplace(key, v);
    return v;
}

inline Rational random_rational(std::mt19937_64& rng, long range = 9, long den_range = 5) {
    const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
    const long den = static_cast<long>(rng() % static_cast<std::uint64_t>(den_range)) + 1;
    return Rational(num, den);
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    ExactMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = random_rational(rng);
    return a;
}

/// Sum of path weights from `from` to `to` by plain recursion on edges.
inline Rational path_sum(const fujimoto::PlanarNetwork& net, const fujimoto::Vertex& from,
                         const fujimoto::Vertex& to) {
    if (from == to) return Rational(1);
    Rational total;
    for (const auto& e : net.edges()) {
        if (e.from == from) total += e.weight * path_sum(net, e.to, to);
    }
    return total;
}

/// Evaluates a polynomial with the coefficients in row `r` of `a`.
inline Rational eval_row(const ExactMatrix& a, std::size_t r, const Rational& z) {
    Rational acc, power(1);
    for (std::size_t c = 0; c < a.cols(); ++c) {
        acc += a(r, c) * power;
        power *= z;
    }
    return acc;
}

/// Rationals to compare in tests against expected integer values.
inline ExactMatrix integer_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Rational> entries;
    std::size_t cols = 0, count = 0;
    for (const auto& row : rows) {
        cols = row.size();
        ++count;
        for (long v : row) entries.emplace_back(v);
    }
    return ExactMatrix(count, cols, std::move(entries));
}

} // namespace oracle
