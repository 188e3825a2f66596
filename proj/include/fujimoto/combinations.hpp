#pragma once

#include <cstdint>
#include <vector>

namespace fujimoto {

/// Advances `c` (a strictly increasing k-subset of {0, ..., n - 1}) to its
/// lexicographic successor. Returns false if `c` was the last subset.
inline bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) {
        --i;
    }
    if (i < 0) {
        return false;
    }
    ++c[i];
    for (int j = i + 1; j < k; ++j) {
        c[j] = c[j - 1] + 1;
    }
    return true;
}

/// The k-subset of {0, ..., n - 1} with the given lexicographic rank.
/// Requires rank < C(n, k) and C(n, k) representable in 64 bits.
std::vector<int> unrank_combination(std::uint64_t rank, int n, int k);

/// Lexicographic rank of a strictly increasing k-subset of {0, ..., n - 1}.
std::uint64_t rank_combination(const std::vector<int>& c, int n);

} // namespace fujimoto
