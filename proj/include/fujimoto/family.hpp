#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "fujimoto/exact_matrix.hpp"
#include "fujimoto/minor_scan.hpp"
#include "fujimoto/planar_network.hpp"
#include "fujimoto/polynomial.hpp"

namespace fujimoto {

struct FamilyParams {
    int m = 2;
    int t = 1;

    /// Throws PreconditionError unless m is even and at least 2.
    static FamilyParams from_m(int m);
};

/// z^{i-1} for i <= t, (z-1)^{i-1} for t < i <= 2t, z^{i-t-1}(z-1)^{m-i+t}
/// for 2t < i <= 3t.
std::vector<IntPolynomial> family_polys(const FamilyParams& p);

/// Row i holds the coefficients of polys[i] in 1, z, ..., z^{width-1}.
/// Throws PreconditionError if some degree reaches `width`.
ExactMatrix coefficient_matrix(const std::vector<IntPolynomial>& polys, std::size_t width);
ExactMatrix coefficient_matrix(const std::vector<RatPolynomial>& polys, std::size_t width);

/// The m x m block matrix (M1 M2; O M3).
ExactMatrix build_M(const FamilyParams& p);

/// M1 = C(t+i-1, j-1), M2 = C(t+i-1, t+j-1), M3 = C(t-i, j-i), 1 <= i, j <= t.
ExactMatrix block_M1(int t);
ExactMatrix block_M2(int t);
ExactMatrix block_M3(int t);

std::tuple<Rational, Rational, Rational> block_determinants(const FamilyParams& p);

/// Diagonal signs used by the factorization: 3t on the left, m on the right.
std::vector<int> default_left_signs(const FamilyParams& p);
std::vector<int> default_right_signs(const FamilyParams& p);

/// diag(left) * (I_t O; M1 M2; O M3) * diag(right).
ExactMatrix sign_factorization_product(const FamilyParams& p, const std::vector<int>& left,
                                       const std::vector<int>& right);

/// Whether the product with the given signs equals the coefficient matrix.
bool sign_factorization_check(const FamilyParams& p, const std::vector<int>& left,
                              const std::vector<int>& right);
bool sign_factorization_check(const FamilyParams& p);

bool verify_network_equals_M(const FamilyParams& p);

inline constexpr std::uint64_t kExhaustiveSubsetBudget = 10'000'000;

/// Maximal-minor scan of the family's coefficient matrix. An exhaustive
/// request over more than `budget` subsets throws BudgetError.
GeneralPositionReport general_position(const FamilyParams& p, const ScanMode& mode,
                                       const ScanOptions& options = {},
                                       std::uint64_t budget = kExhaustiveSubsetBudget);

struct PositiveMinor {
    MinorQuery query; // 1-based indices into the m x m block matrix
    Rational value;
    std::optional<PathCollection> witness;
};

struct PositiveMinorReport {
    int m = 0;
    std::uint64_t minors_checked = 0;
    std::uint64_t witnesses_found = 0;
    bool witnesses_requested = false;
    /// Minors that are not strictly positive, or lack a witness when
    /// witnesses were requested.
    std::vector<PositiveMinor> failures;
    /// Every checked minor, in enumeration order, when `keep_all` is set.
    std::vector<PositiveMinor> minors;

    bool passed() const { return failures.empty(); }
};

/// Every minor of the block matrix whose column set contains t+1, ..., m.
/// Throws BudgetError when their number exceeds `budget`.
PositiveMinorReport positive_minor_scan(const FamilyParams& p, bool with_witnesses, bool keep_all = false,
                                        std::uint64_t budget = 1'000'000, unsigned threads = 0);

} // namespace fujimoto
