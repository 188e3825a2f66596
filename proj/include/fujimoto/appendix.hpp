#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fujimoto/ext_scalar.hpp"
#include "fujimoto/family.hpp"
#include "fujimoto/minor_scan.hpp"

namespace fujimoto {

/// Pairs (a_j, b_j), j = 1..t, with (a_1, b_1) = (0, 1).
struct ExtendedFamilyConstants {
    std::vector<std::pair<Rational, Rational>> pairs;

    /// Throws PreconditionError unless there are t pairs, the first is
    /// (0, 1), and all 2t values are distinct.
    void validate(const FamilyParams& p) const;
    /// The 2t values a_1, b_1, a_2, b_2, ...
    std::vector<Rational> values() const;
};

/// The 3t base polynomials followed by (z - a_j)^{m-i} (z - b_j)^{i-1},
/// j = 2..t, i = 1..m: m(m+1)/2 in total.
std::vector<RatPolynomial> extended_family(const FamilyParams& p, const ExtendedFamilyConstants& c);

/// Maximal-minor scan of the extended family's coefficient matrix. An
/// exhaustive request over more than `budget` subsets throws BudgetError.
GeneralPositionReport verify_extended_general_position(const FamilyParams& p, const ExtendedFamilyConstants& c,
                                                       const ScanMode& mode, const ScanOptions& options = {},
                                                       std::uint64_t budget = kExhaustiveSubsetBudget);

struct SearchOptions {
    long bound = 10;
    std::uint64_t seed = 0;
    /// Candidates tried per pair before giving up.
    std::uint64_t retry_limit = 2000;
    /// Subsets per scan when a stage is too large to scan exhaustively.
    std::uint64_t sample_count = 100'000;
    std::uint64_t exhaustive_budget = kExhaustiveSubsetBudget;
    ScanOptions scan;
};

struct RejectedCandidate {
    int pair = 0; // j
    Rational a, b;
    std::uint64_t failures = 0;
};

struct SearchResult {
    ExtendedFamilyConstants constants;
    std::vector<RejectedCandidate> rejected;
    std::uint64_t candidates_tried = 0;
    /// Scan of the full family with the accepted constants.
    GeneralPositionReport final_report;
};

struct SearchExhausted : std::runtime_error {
    SearchExhausted(const std::string& what, SearchResult partial)
        : std::runtime_error(what), best(std::move(partial)) {}
    /// The pairs accepted before the limit was hit.
    SearchResult best;
};

/// Chooses (a_j, b_j) one pair at a time: integers in [-bound, bound] by
/// increasing magnitude, then random rationals with numerator and
/// denominator bounded by `bound`, drawn from a generator seeded with `seed`.
/// A pair is kept once every m-subset of the family truncated after it is
/// independent. Throws PreconditionError for m < 4 and SearchExhausted when
/// a pair runs out of candidates.
SearchResult search_constants(const FamilyParams& p, const SearchOptions& options);

/// Determinant of (d^v/dz^v g_r)(point), v = 0..n-1.
Rational wronskian(const std::vector<RatPolynomial>& polys, const Rational& point);

/// h_1, ..., h_m over Q(i, sqrt(t - 1)). Throws PreconditionError for m = 2.
std::vector<ExtPolynomial> weierstrass_h(const FamilyParams& p);

struct WeierstrassData {
    int m = 0;
    ExtendedFamilyConstants constants;
    std::vector<ExtPolynomial> h;
    /// c[i][j] with f_i = sum_j c[i][j] h_j.
    std::vector<std::vector<ExtScalar>> c;
    std::vector<Rational> psi_roots;
};

WeierstrassData hyperplane_coefficients(const FamilyParams& p, const ExtendedFamilyConstants& c);

nlohmann::json to_json(const WeierstrassData& w);

} // namespace fujimoto
