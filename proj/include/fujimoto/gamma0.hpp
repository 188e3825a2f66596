#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fujimoto/exact_matrix.hpp"
#include "fujimoto/planar_network.hpp"

namespace fujimoto {

using WeightIndex = std::pair<int, int>;

/// Edge weights (l_{i,j}, m_k, r_{i,j}) of the three-section network with n
/// boundary vertices per side: 1 <= i, j <= n - 1 with 2 <= i + j <= n for
/// l and r, and 1 <= k <= n for m (stored at m[k - 1]).
struct Gamma0Weights {
    int n = 0;
    std::map<WeightIndex, Rational> l;
    std::vector<Rational> m;
    std::map<WeightIndex, Rational> r;
    /// Optional display labels keyed like l and r.
    std::map<WeightIndex, std::string> l_labels;
    std::map<WeightIndex, std::string> r_labels;

    /// Throws PreconditionError unless every l, m, r weight is present and
    /// no index lies outside the table.
    void validate() const;

    friend bool operator==(const Gamma0Weights& a, const Gamma0Weights& b) {
        return a.n == b.n && a.l == b.l && a.m == b.m && a.r == b.r;
    }
};

/// The network on columns 0 .. 2n - 1. Columns 0 .. n - 1 form the left
/// section, whose descending diagonals all start on the top level; the
/// edge into column c + 1 with lower level p carries l_{p - j + 1, j} with
/// j = n - 1 - c. Column n - 1 -> n holds the middle edges m_k at level k.
/// Columns n .. 2n - 1 form the right section, whose ascending diagonals
/// all leave column n; the edge from level p to p + 1 arriving at column
/// n + j carries r_{p - j + 1, j}. Every horizontal edge has weight 1.
/// Sources are (0, k) and sinks (2n - 1, k).
PlanarNetwork build_gamma0(const Gamma0Weights& w);

/// Inverse of build_gamma0 on edge labels.
Gamma0Weights read_gamma0_weights(const PlanarNetwork& net, int n);

/// The nonnegative weights realizing the block matrix of the family with
/// t = m / 2. Requires m even and positive.
Gamma0Weights omega0(int m);

struct SubLatticeSpec {
    int a = 0; // diagonal steps
    int b = 0; // horizontal steps
    long k = 0;
};

/// C(a + b, a) (k + b)_a.
BigInt w_ab_formula(const SubLatticeSpec& s);

/// The a x b lattice with integer diagonal weights: a diagonal step taken
/// after q diagonal and h horizontal steps weighs k + (a - q - 1) + 2(b - h);
/// horizontal steps weigh 1. Vertex (q, h) sits at column q + h, level q - h.
PlanarNetwork sublattice_network(const SubLatticeSpec& s);

/// Sum of path weights across sublattice_network(s) by explicit
/// enumeration. Throws BudgetError when C(a + b, a) exceeds `budget`.
BigInt w_ab_oracle(const SubLatticeSpec& s, std::uint64_t budget = 10'000'000);

/// Closed form of x(Gamma0, omega0(m)) at (i, j), 1-based, t = m / 2.
BigInt closed_form_entry(int i, int j, int m);

struct LemmaMismatch {
    std::string quantity; // "up", "down" or "total"
    int i = 0;
    int j = 0;
    Rational observed;
    Rational expected;
};

struct LemmaPathReport {
    int m = 0;
    std::uint64_t paths_enumerated = 0;
    /// Weight sums over paths with no descending step, no ascending step,
    /// and all paths, indexed by (source, sink).
    ExactMatrix up;
    ExactMatrix down;
    ExactMatrix total;
    std::vector<LemmaMismatch> mismatches;

    bool passed() const { return mismatches.empty(); }
};

/// Expected w(i up j): C(t, j - i) for i <= t and C(2t - i, j - i) for i > t.
BigInt expected_up(int i, int j, int m);
/// Expected w(i down k): C(i - 1, k - 1) for i <= t and [k == i] for i > t.
BigInt expected_down(int i, int k, int m);

/// Enumerates every source-to-sink path of Gamma0(omega0(m)), sums the
/// weights by step class and compares against the closed forms. Throws
/// BudgetError when the network holds more than `budget` boundary paths.
LemmaPathReport lemma_path_report(int m, std::uint64_t budget = 10'000'000, unsigned threads = 0);

} // namespace fujimoto
