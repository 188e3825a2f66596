#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fujimoto/exact_matrix.hpp"

namespace fujimoto {

struct ScanMode {
    enum class Kind { exhaustive, sampled };

    Kind kind = Kind::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t count = 0;

    static ScanMode exhaustive() { return {}; }
    static ScanMode sampled(std::uint64_t seed, std::uint64_t count) {
        return {Kind::sampled, seed, count};
    }
    bool is_sampled() const { return kind == Kind::sampled; }
};

struct ScanOptions {
    /// 0 selects default_thread_count().
    unsigned threads = 0;
};

/// Thread count from FUJIMOTO_THREADS if set, else hardware concurrency.
unsigned default_thread_count();

struct ScanFailure {
    std::vector<int> rows; // 1-based
    Rational det;

    friend bool operator==(const ScanFailure&, const ScanFailure&) = default;
};

struct GeneralPositionReport {
    BigInt total_subsets;
    std::uint64_t checked_subsets = 0;
    std::vector<ScanFailure> failures;
    ScanMode mode;
    std::optional<Rational> min_abs_nonzero_det;
    double elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
};

/// Determinant of every cols x cols submatrix formed by choosing `cols` rows
/// of `m`; records each vanishing one. Failures are reported in
/// lexicographic row-subset order independently of the thread count. In
/// sampled mode `count` distinct subsets are drawn uniformly from a
/// generator seeded with `seed`.
GeneralPositionReport maximal_minor_scan(const ExactMatrix& m, const ScanMode& mode,
                                         const ScanOptions& options = {});

nlohmann::json to_json(const GeneralPositionReport& report);
std::string mode_name(const ScanMode& mode);

/// The sampled subsets (0-based, lexicographically sorted) that
/// maximal_minor_scan evaluates for the given shape and mode.
std::vector<std::vector<int>> sample_subsets(int n, int k, std::uint64_t seed, std::uint64_t count);

} // namespace fujimoto
