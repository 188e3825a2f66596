#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "fujimoto/combinations.hpp"
#include "fujimoto/combinatorics.hpp"
#include "fujimoto/gamma0.hpp"
#include "fujimoto/planar_network.hpp"
#include "oracles.hpp"

using namespace fujimoto;

namespace {

ExactMatrix grid_closed_form(int np, int n) {
    ExactMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            out(i - 1, j - 1) = Rational(oracle::pascal(2 * np - i - j + 2, np - i + 1));
    return out;
}

// Two parallel chains: 1 -> 1' and 2 -> 2', no cross edges.
PlanarNetwork two_chains() {
    return PlanarNetwork({{0, 1}, {0, 2}, {1, 1}, {1, 2}},
                         {{{0, 1}, {1, 1}, Rational(3), {}}, {{0, 2}, {1, 2}, Rational(5), {}}},
                         {{0, 1}, {0, 2}}, {{1, 1}, {1, 2}});
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    do {
        std::vector<int> one_based;
        for (int v : c) one_based.push_back(v + 1);
        out.push_back(one_based);
    } while (next_combination(c, n));
    return out;
}

} // namespace

TEST_CASE("network construction rejects malformed input") {
    CHECK_THROWS_AS(PlanarNetwork({{0, 0}, {0, 0}}, {}, {}, {}), PreconditionError);
    CHECK_THROWS_AS(PlanarNetwork({{0, 0}, {1, 0}}, {{{1, 0}, {0, 0}, Rational(1), {}}}, {}, {}),
                    PreconditionError);
    CHECK_THROWS_AS(PlanarNetwork({{0, 0}}, {{{0, 0}, {1, 0}, Rational(1), {}}}, {}, {}), PreconditionError);
    CHECK_THROWS_AS(PlanarNetwork({{0, 0}, {0, 1}}, {}, {{0, 1}, {0, 0}}, {}), PreconditionError);
    CHECK_THROWS_AS(PlanarNetwork({{0, 0}}, {}, {{0, 5}}, {}), PreconditionError);
}

TEST_CASE("weight matrix examples") {
    CHECK(weight_matrix(build_gamma0(omega0(2))) == oracle::integer_matrix({{1, 1}, {0, 1}}));
    CHECK(weight_matrix(two_chains()) == oracle::integer_matrix({{3, 0}, {0, 5}}));
    // Boundary-only network whose sources coincide with sinks.
    const PlanarNetwork bare({{0, 1}, {0, 2}}, {}, {{0, 1}, {0, 2}}, {{0, 1}, {0, 2}});
    CHECK(weight_matrix(bare) == ExactMatrix::identity(2));
}

TEST_CASE("weight matrix agrees with recursive path sums") {
    for (int m : {2, 4, 6}) {
        const PlanarNetwork net = build_gamma0(omega0(m));
        const ExactMatrix x = weight_matrix(net);
        for (std::size_t i = 0; i < net.sources().size(); ++i)
            for (std::size_t j = 0; j < net.sinks().size(); ++j)
                CHECK(x(i, j) == oracle::path_sum(net, net.sources()[i], net.sinks()[j]));
    }
}

TEST_CASE("grid examples") {
    CHECK(weight_matrix(build_grid(1, 2)) == oracle::integer_matrix({{2, 1}, {1, 1}}));
    CHECK(weight_matrix(build_grid(2, 1)) == oracle::integer_matrix({{6}}));
    CHECK(weight_matrix(build_grid(1, 1)) == oracle::integer_matrix({{2}}));
    CHECK_THROWS_AS(build_grid(2, 4), PreconditionError);
    CHECK_THROWS_AS(build_grid(0, 1), PreconditionError);
    CHECK_THROWS_AS(build_grid(2, 0), PreconditionError);
}

TEST_CASE("grid closed form for all sizes") {
    for (int np = 1; np <= 6; ++np)
        for (int n = 1; n <= np + 1; ++n) CHECK(weight_matrix(build_grid(np, n)) == grid_closed_form(np, n));
}

TEST_CASE("grid weight matrix is totally nonnegative") {
    for (int np = 1; np <= 3; ++np) CHECK(is_totally_nonnegative(weight_matrix(build_grid(np, np + 1))).holds);
}

TEST_CASE("LGV oracle examples") {
    const PlanarNetwork grid = build_grid(1, 2);
    CHECK(lgv_oracle_minor(grid, {{1}, {1}}) == Rational(2));
    const PlanarNetwork g4 = build_gamma0(omega0(4));
    CHECK(lgv_oracle_minor(g4, {{1}, {3}}) == Rational(1));
    CHECK(lgv_oracle_minor(g4, {{1}, {4}}) == Rational(0));
    CHECK(lgv_oracle_minor(two_chains(), {{1}, {2}}) == Rational(0));
    CHECK(lgv_oracle_minor(two_chains(), {{1, 2}, {1, 2}}) == Rational(15));
    CHECK_THROWS_AS(lgv_oracle_minor(build_grid(6, 7), {{1, 2, 3, 4}, {1, 2, 3, 4}}, 1000), BudgetError);
}

TEST_CASE("LGV oracle matches grid minors") {
    for (int np = 1; np <= 3; ++np) {
        const PlanarNetwork net = build_grid(np, np + 1);
        const ExactMatrix x = weight_matrix(net);
        const int n = np + 1;
        for (int k = 1; k <= n; ++k) {
            for (const auto& rows : subsets(n, k)) {
                for (const auto& cols : subsets(n, k)) {
                    const MinorQuery q{rows, cols};
                    CHECK(lgv_oracle_minor(net, q) == minor(x, q));
                }
            }
        }
    }
}

TEST_CASE("find_positive_collection") {
    const PlanarNetwork g4 = build_gamma0(omega0(4));
    const auto full = find_positive_collection(g4, {{1, 2, 3, 4}, {1, 2, 3, 4}});
    REQUIRE(full);
    CHECK(full->weight == Rational(1));
    REQUIRE(full->paths.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        for (const auto& v : full->paths[k]) CHECK(v.level == static_cast<int>(k) + 1);
    }

    const auto lower = find_positive_collection(g4, {{3, 4}, {3, 4}});
    REQUIRE(lower);
    CHECK(lower->weight > Rational(0));

    // Paths are vertex-disjoint and the weight is the product of their edges.
    std::set<Vertex> used;
    for (const auto& p : lower->paths)
        for (const auto& v : p) CHECK(used.insert(v).second);

    const PlanarNetwork zero({{0, 1}, {1, 1}}, {{{0, 1}, {1, 1}, Rational(0), {}}}, {{0, 1}}, {{1, 1}});
    CHECK_FALSE(find_positive_collection(zero, {{1}, {1}}));
}

TEST_CASE("for_each_path enumerates every path once") {
    const PlanarNetwork grid = build_grid(3, 1);
    std::uint64_t count = 0;
    std::set<std::vector<std::size_t>> seen;
    for_each_path(grid, grid.sources()[0], grid.sinks()[0], [&](const std::vector<std::size_t>& p) {
        ++count;
        seen.insert(p);
    });
    CHECK(count == 20);
    CHECK(seen.size() == 20);
    CHECK_THROWS_AS(for_each_path(grid, grid.sources()[0], grid.sinks()[0], [](const auto&) {}, 5), BudgetError);
}

TEST_CASE("DOT export") {
    const PlanarNetwork bare({{0, 1}, {3, 2}}, {}, {}, {});
    const std::string empty = export_dot(bare);
    CHECK(empty.rfind("digraph", 0) == 0);
    CHECK(empty.find("\"c0_l1\"") != std::string::npos);

    const std::string dot = export_dot(build_gamma0(omega0(2)));
    CHECK(dot.find("\"c2_l1\" -> \"c3_l2\" [label=\"1/1\"]") != std::string::npos);
    CHECK(export_dot(build_gamma0(omega0(4))) == export_dot(build_gamma0(omega0(4))));
}

TEST_CASE("JSON round trip") {
    const PlanarNetwork net = build_gamma0(omega0(6));
    const auto j = export_json(net);
    CHECK(j.contains("vertices"));
    CHECK(j.contains("edges"));
    CHECK(j["sources"].size() == 6);
    const auto back = import_json(j.dump());
    CHECK(back.warnings.empty());
    CHECK(back.network == net);
    CHECK(weight_matrix(back.network) == weight_matrix(net));

    // Edge multiset from the DOT view matches the JSON view.
    CHECK(export_dot(back.network) == export_dot(net));
}

TEST_CASE("JSON import errors and normalization") {
    const std::string text = export_json(build_grid(1, 1)).dump();
    try {
        import_json(text.substr(0, text.size() / 2));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
    CHECK_THROWS_AS(import_json("{\"vertices\": 3}"), ParseError);

    const std::string reducible = R"({"vertices":[{"column":0,"level":0},{"column":1,"level":0}],
        "edges":[{"from":{"column":0,"level":0},"to":{"column":1,"level":0},"weight":"2/4"}],
        "sources":[{"column":0,"level":0}],"sinks":[{"column":1,"level":0}]})";
    const auto r = import_json(reducible);
    CHECK(r.warnings.size() == 1);
    CHECK(r.network.edges()[0].weight == Rational(1, 2));
    CHECK(r.network.edges()[0].weight.to_string() == "1/2");
}

TEST_CASE("with_weights replaces every weight") {
    const PlanarNetwork net = build_gamma0(omega0(4));
    const PlanarNetwork ones = net.with_weights([](const Edge&) { return Rational(1); });
    for (const auto& e : ones.edges()) CHECK(e.weight == Rational(1));
    CHECK(ones.edges().size() == net.edges().size());
}
