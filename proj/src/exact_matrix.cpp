#include "fujimoto/exact_matrix.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "fujimoto/combinations.hpp"
#include "fujimoto/combinatorics.hpp"

namespace fujimoto {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw PreconditionError("matrix entry count does not match its shape");
    }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw PreconditionError("ragged matrix initializer");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Rational(1);
    }
    return m;
}

ExactMatrix ExactMatrix::submatrix(std::span<const int> rows0, std::span<const int> cols0) const {
    ExactMatrix s(rows0.size(), cols0.size());
    for (std::size_t i = 0; i < rows0.size(); ++i) {
        for (std::size_t j = 0; j < cols0.size(); ++j) {
            s(i, j) = (*this)(static_cast<std::size_t>(rows0[i]), static_cast<std::size_t>(cols0[j]));
        }
    }
    return s;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) {
        throw PreconditionError("matrix product shape mismatch");
    }
    ExactMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) {
            os << (j ? ", " : "") << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

void validate_minor_query(const MinorQuery& q, std::size_t rows, std::size_t cols) {
    if (q.rows.empty() || q.rows.size() != q.cols.size()) {
        throw PreconditionError("minor index sets must be nonempty and of equal size");
    }
    auto check = [](const std::vector<int>& idx, std::size_t bound, const char* what) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (idx[k] < 1 || static_cast<std::size_t>(idx[k]) > bound) {
                throw PreconditionError(std::string(what) + " index out of range");
            }
            if (k > 0 && idx[k] <= idx[k - 1]) {
                throw PreconditionError(std::string(what) + " indices must be strictly increasing");
            }
        }
    };
    check(q.rows, rows, "row");
    check(q.cols, cols, "column");
}

namespace detail {

BigInt to_bigint(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    const auto hi = static_cast<unsigned long>(u >> 64);
    const auto lo = static_cast<unsigned long>(u & ~0UL);
    BigInt r(hi);
    r <<= 64;
    r += lo;
    return neg ? BigInt(-r) : r;
}

std::optional<__int128> bareiss_int128(std::span<const std::int64_t> src, std::size_t n) {
    thread_local std::vector<__int128> a;
    a.assign(src.begin(), src.end());
    int sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p * n + k] == 0) {
            ++p;
        }
        if (p == n) {
            return __int128{0};
        }
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) {
                std::swap(a[p * n + j], a[k * n + j]);
            }
            sign = -sign;
        }
        const __int128 pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const __int128 lead = a[i * n + k];
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 x, y, d;
                if (__builtin_mul_overflow(pivot, a[i * n + j], &x) ||
                    __builtin_mul_overflow(lead, a[k * n + j], &y) ||
                    __builtin_sub_overflow(x, y, &d)) {
                    return std::nullopt;
                }
                a[i * n + j] = (prev == 1) ? d : d / prev;
            }
        }
        prev = pivot;
    }
    return sign * a[n * n - 1];
}

BigInt bareiss_bigint(std::vector<BigInt> a, std::size_t n) {
    int sign = 1;
    BigInt prev = 1;
    BigInt t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p * n + k] == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) {
                swap(a[p * n + j], a[k * n + j]);
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t = a[k * n + k] * a[i * n + j];
                t -= a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k * n + k];
    }
    if (n == 0) {
        return 1;
    }
    return sign * a[n * n - 1];
}

BigInt integer_determinant(std::vector<BigInt> a, std::size_t n) {
    if (n == 0) {
        return 1;
    }
    const bool fits = std::all_of(a.begin(), a.end(), [](const BigInt& v) { return v.fits_slong_p(); });
    if (fits) {
        std::vector<std::int64_t> small(a.size());
        std::transform(a.begin(), a.end(), small.begin(), [](const BigInt& v) { return v.get_si(); });
        if (auto d = bareiss_int128(small, n)) {
            return to_bigint(*d);
        }
    }
    return bareiss_bigint(std::move(a), n);
}

BigInt row_denominator_lcm(std::span<const Rational> row) {
    BigInt l = 1;
    for (const auto& v : row) {
        const auto& den = v.raw().get_den();
        if (den != 1) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
    }
    return l;
}

} // namespace detail

Rational determinant(const ExactMatrix& m) {
    if (!m.is_square()) {
        throw PreconditionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    std::vector<BigInt> lifted(n * n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const BigInt l = detail::row_denominator_lcm(m.row(i));
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& q = m(i, j).raw();
            lifted[i * n + j] = q.get_num() * (l / q.get_den());
        }
    }
    return Rational(detail::integer_determinant(std::move(lifted), n), scale);
}

Rational minor(const ExactMatrix& m, const MinorQuery& q) {
    validate_minor_query(q, m.rows(), m.cols());
    std::vector<int> r0(q.rows.size()), c0(q.cols.size());
    std::transform(q.rows.begin(), q.rows.end(), r0.begin(), [](int v) { return v - 1; });
    std::transform(q.cols.begin(), q.cols.end(), c0.begin(), [](int v) { return v - 1; });
    return determinant(m.submatrix(r0, c0));
}

BigInt minor_count(std::size_t rows, std::size_t cols) {
    BigInt total = 0;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        total += binomial(static_cast<long>(rows), static_cast<long>(k)) *
                 binomial(static_cast<long>(cols), static_cast<long>(k));
    }
    return total;
}

namespace {

PositivityResult positivity_scan(const ExactMatrix& m, std::uint64_t size_guard, bool strict) {
    const BigInt count = minor_count(m.rows(), m.cols());
    if (count > BigInt(static_cast<unsigned long>(size_guard))) {
        throw BudgetError("matrix too large for exhaustive scan: " + count.get_str() +
                          " minors exceed the guard of " + std::to_string(size_guard));
    }
    PositivityResult result;
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<int> rs(k);
        for (int i = 0; i < k; ++i) {
            rs[i] = i;
        }
        do {
            std::vector<int> cs(k);
            for (int i = 0; i < k; ++i) {
                cs[i] = i;
            }
            do {
                const Rational d = determinant(m.submatrix(rs, cs));
                ++result.minors_checked;
                if (strict ? d.sign() <= 0 : d.sign() < 0) {
                    MinorQuery w;
                    for (int r : rs) w.rows.push_back(r + 1);
                    for (int c : cs) w.cols.push_back(c + 1);
                    result.holds = false;
                    result.witness = std::move(w);
                    result.witness_value = d;
                    return result;
                }
            } while (next_combination(cs, cols));
        } while (next_combination(rs, rows));
    }
    return result;
}

} // namespace

PositivityResult is_totally_nonnegative(const ExactMatrix& m, std::uint64_t size_guard) {
    return positivity_scan(m, size_guard, false);
}

PositivityResult is_totally_positive(const ExactMatrix& m, std::uint64_t size_guard) {
    return positivity_scan(m, size_guard, true);
}

} // namespace fujimoto
