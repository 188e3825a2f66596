#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fujimoto/errors.hpp"
#include "fujimoto/rational.hpp"

namespace fujimoto {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    const std::vector<Rational>& entries() const { return entries_; }

    ExactMatrix submatrix(std::span<const int> rows0, std::span<const int> cols0) const;
    ExactMatrix transpose() const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Row set I and column set J of a minor, strictly increasing and 1-based.
struct MinorQuery {
    std::vector<int> rows;
    std::vector<int> cols;

    friend bool operator==(const MinorQuery&, const MinorQuery&) = default;
};

/// Throws PreconditionError unless `q` selects a valid minor of an
/// rows x cols matrix.
void validate_minor_query(const MinorQuery& q, std::size_t rows, std::size_t cols);

/// Exact determinant via fraction-free elimination on a row-wise
/// common-denominator lift. Throws PreconditionError for non-square input.
Rational determinant(const ExactMatrix& m);

/// Determinant of the submatrix selected by q (the minor Delta_{I,J}).
Rational minor(const ExactMatrix& m, const MinorQuery& q);

inline constexpr std::uint64_t kDefaultMinorGuard = 1'000'000;

struct PositivityResult {
    bool holds = true;
    std::optional<MinorQuery> witness;
    Rational witness_value;
    std::uint64_t minors_checked = 0;
};

/// Total number of square minors, sum_k C(rows, k) C(cols, k).
BigInt minor_count(std::size_t rows, std::size_t cols);

/// Checks every minor is >= 0. Throws BudgetError if the number of minors
/// exceeds `size_guard`.
PositivityResult is_totally_nonnegative(const ExactMatrix& m,
                                        std::uint64_t size_guard = kDefaultMinorGuard);

/// Checks every minor is > 0. Throws BudgetError if the number of minors
/// exceeds `size_guard`.
PositivityResult is_totally_positive(const ExactMatrix& m,
                                     std::uint64_t size_guard = kDefaultMinorGuard);

namespace detail {

/// Fraction-free Bareiss determinant of an n x n integer matrix (row-major,
/// consumed). Uses checked 128-bit arithmetic when every entry fits in 64
/// bits, falling back to arbitrary precision on overflow.
BigInt integer_determinant(std::vector<BigInt> a, std::size_t n);

/// 128-bit Bareiss on a row-major n x n matrix of 64-bit entries. Returns
/// nullopt if any intermediate value would overflow.
std::optional<__int128> bareiss_int128(std::span<const std::int64_t> a, std::size_t n);

BigInt bareiss_bigint(std::vector<BigInt> a, std::size_t n);

BigInt to_bigint(__int128 v);

/// Least common multiple of the denominators in a row.
BigInt row_denominator_lcm(std::span<const Rational> row);

} // namespace detail

} // namespace fujimoto
