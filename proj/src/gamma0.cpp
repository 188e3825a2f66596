#include "fujimoto/gamma0.hpp"

#include <algorithm>

#include "fujimoto/combinatorics.hpp"
#include "fujimoto/parallel.hpp"
#include "fujimoto/minor_scan.hpp"

namespace fujimoto {

void Gamma0Weights::validate() const {
    if (n < 1) {
        throw PreconditionError("Gamma0 needs at least one boundary vertex");
    }
    if (m.size() != static_cast<std::size_t>(n)) {
        throw PreconditionError("expected " + std::to_string(n) + " middle weights, got " + std::to_string(m.size()));
    }
    const std::size_t tri = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    auto check = [&](const std::map<WeightIndex, Rational>& table, const char* name) {
        for (const auto& [idx, _] : table) {
            const auto [i, j] = idx;
            if (i < 1 || j < 1 || i + j > n) {
                throw PreconditionError(std::string(name) + " weight index (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ") outside the table");
            }
        }
        if (table.size() != tri) {
            throw PreconditionError(std::string("incomplete ") + name + " weight table: " +
                                    std::to_string(table.size()) + " of " + std::to_string(tri));
        }
    };
    check(l, "l");
    check(r, "r");
}

namespace {

std::string label_or_empty(const std::map<WeightIndex, std::string>& labels, const WeightIndex& idx) {
    const auto it = labels.find(idx);
    return it == labels.end() ? std::string() : it->second;
}

bool left_vertex_exists(int n, int c, int p) { return c == 0 || c == n - 1 || p >= n - c; }

bool right_vertex_exists(int n, int c, int p) { return c == 0 || c == n - 1 || p >= c + 1; }

} // namespace

PlanarNetwork build_gamma0(const Gamma0Weights& w) {
    w.validate();
    const int n = w.n;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    auto add_horizontals = [&](int first, auto exists) {
        for (int p = 1; p <= n; ++p) {
            int prev = -1;
            for (int c = 0; c < n; ++c) {
                if (!exists(c, p)) {
                    continue;
                }
                vertices.push_back({first + c, p});
                if (prev >= 0) {
                    edges.push_back({{first + prev, p}, {first + c, p}, Rational(1), {}});
                }
                prev = c;
            }
        }
    };
    add_horizontals(0, [n](int c, int p) { return left_vertex_exists(n, c, p); });
    add_horizontals(n, [n](int c, int p) { return right_vertex_exists(n, c, p); });

    // Left descending edges (c, p + 1) -> (c + 1, p).
    for (int c = 0; c + 1 < n; ++c) {
        const int j = n - 1 - c;
        for (int p = std::max(1, n - 1 - c); p <= n - 1; ++p) {
            const WeightIndex idx{p - j + 1, j};
            edges.push_back({{c, p + 1}, {c + 1, p}, w.l.at(idx), label_or_empty(w.l_labels, idx)});
        }
    }
    for (int k = 1; k <= n; ++k) {
        edges.push_back({{n - 1, k}, {n, k}, w.m[static_cast<std::size_t>(k - 1)], {}});
    }
    // Right ascending edges (n + j - 1, p) -> (n + j, p + 1).
    for (int j = 1; j <= n - 1; ++j) {
        for (int p = j; p <= n - 1; ++p) {
            const WeightIndex idx{p - j + 1, j};
            edges.push_back({{n + j - 1, p}, {n + j, p + 1}, w.r.at(idx), label_or_empty(w.r_labels, idx)});
        }
    }

    std::vector<Vertex> sources, sinks;
    for (int k = 1; k <= n; ++k) {
        sources.push_back({0, k});
        sinks.push_back({2 * n - 1, k});
    }
    return PlanarNetwork(std::move(vertices), std::move(edges), std::move(sources), std::move(sinks));
}

Gamma0Weights read_gamma0_weights(const PlanarNetwork& net, int n) {
    Gamma0Weights w;
    w.n = n;
    w.m.assign(static_cast<std::size_t>(n), Rational());
    for (const auto& e : net.edges()) {
        if (e.to.level == e.from.level) {
            if (e.from.column == n - 1 && e.to.column == n) {
                w.m[static_cast<std::size_t>(e.from.level - 1)] = e.weight;
            }
            continue;
        }
        if (e.to.column <= n - 1) {
            const int j = n - 1 - e.from.column;
            const int p = e.to.level;
            w.l[{p - j + 1, j}] = e.weight;
        } else {
            const int j = e.to.column - n;
            const int p = e.from.level;
            w.r[{p - j + 1, j}] = e.weight;
        }
    }
    return w;
}

Gamma0Weights omega0(int m) {
    if (m < 2 || m % 2 != 0) {
        throw PreconditionError("omega0 needs an even m >= 2, got " + std::to_string(m));
    }
    const int t = m / 2;
    Gamma0Weights w;
    w.n = m;
    w.m.assign(static_cast<std::size_t>(m), Rational(1));
    for (int i = 1; i <= m - 1; ++i) {
        for (int j = 1; i + j <= m; ++j) {
            const WeightIndex idx{i, j};
            const bool left_on = i + j <= t;
            w.l[idx] = Rational(left_on ? 1 : 0);
            w.l_labels[idx] = left_on ? "1" : "0";

            long num = 0;
            const long den = i + j - 1;
            if (j > t) {
                num = 0;
            } else if (i > t) {
                num = m - (i + j) + 1;
            } else {
                num = i + (t - j);
            }
            w.r[idx] = Rational(num, den);
            w.r_labels[idx] = num == 0 ? "0" : std::to_string(num) + "/" + std::to_string(den);
        }
    }
    return w;
}

BigInt w_ab_formula(const SubLatticeSpec& s) {
    if (s.a < 0 || s.b < 0) {
        throw PreconditionError("sublattice dimensions must be nonnegative");
    }
    const Rational rising = pochhammer(Rational(s.k + s.b), static_cast<unsigned>(s.a));
    return binomial(s.a + s.b, s.a) * rising.numerator();
}

PlanarNetwork sublattice_network(const SubLatticeSpec& s) {
    if (s.a < 0 || s.b < 0) {
        throw PreconditionError("sublattice dimensions must be nonnegative");
    }
    auto at = [](int q, int h) { return Vertex{q + h, q - h}; };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    for (int q = 0; q <= s.a; ++q) {
        for (int h = 0; h <= s.b; ++h) {
            vertices.push_back(at(q, h));
            if (q < s.a) {
                edges.push_back({at(q, h), at(q + 1, h), Rational(s.k + (s.a - q - 1) + 2L * (s.b - h)), {}});
            }
            if (h < s.b) {
                edges.push_back({at(q, h), at(q, h + 1), Rational(1), {}});
            }
        }
    }
    return PlanarNetwork(std::move(vertices), std::move(edges), {at(0, 0)}, {at(s.a, s.b)});
}

BigInt w_ab_oracle(const SubLatticeSpec& s, std::uint64_t budget) {
    const BigInt paths = binomial(s.a + s.b, s.a);
    if (paths > BigInt(static_cast<unsigned long>(budget))) {
        throw BudgetError("sublattice has " + paths.get_str() + " paths, over the budget");
    }
    const PlanarNetwork net = sublattice_network(s);
    BigInt total = 0;
    for_each_path(
        net, net.sources()[0], net.sinks()[0],
        [&](const std::vector<std::size_t>& path) {
            BigInt w = 1;
            for (std::size_t e : path) {
                w *= net.edges()[e].weight.numerator();
            }
            total += w;
        },
        budget);
    return total;
}

BigInt closed_form_entry(int i, int j, int m) {
    if (m < 2 || m % 2 != 0 || i < 1 || i > m || j < 1 || j > m) {
        throw PreconditionError("closed_form_entry index out of range");
    }
    const int t = m / 2;
    return i <= t ? binomial(t + i - 1, j - 1) : binomial(2 * t - i, j - i);
}

BigInt expected_up(int i, int j, int m) {
    const int t = m / 2;
    return i <= t ? binomial(t, j - i) : binomial(2 * t - i, j - i);
}

BigInt expected_down(int i, int k, int m) {
    const int t = m / 2;
    if (i <= t) {
        return binomial(i - 1, k - 1);
    }
    return k == i ? 1 : 0;
}

namespace {

BigInt count_all_paths(const PlanarNetwork& net, std::size_t s) {
    const std::size_t nv = net.vertices().size();
    std::vector<BigInt> count(nv);
    count[s] = 1;
    for (std::size_t v = s; v < nv; ++v) {
        for (std::size_t e : net.out_edges(v)) {
            count[net.edge_target(e)] += count[v];
        }
    }
    BigInt total = 0;
    for (const auto& sink : net.sinks()) {
        total += count[static_cast<std::size_t>(net.index_of(sink))];
    }
    return total;
}

} // namespace

LemmaPathReport lemma_path_report(int m, std::uint64_t budget, unsigned threads) {
    const PlanarNetwork net = build_gamma0(omega0(m));
    BigInt paths = 0;
    for (const auto& s : net.sources()) {
        paths += count_all_paths(net, static_cast<std::size_t>(net.index_of(s)));
    }
    if (paths > BigInt(static_cast<unsigned long>(budget))) {
        throw BudgetError("Gamma0 for m=" + std::to_string(m) + " has " + paths.get_str() +
                          " boundary paths, over the budget of " + std::to_string(budget));
    }

    LemmaPathReport report;
    report.m = m;
    report.paths_enumerated = paths.get_ui();
    report.up = ExactMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    report.down = report.up;
    report.total = report.up;

    const auto boundary = static_cast<std::size_t>(m);
    parallel_for(boundary * boundary, threads ? threads : default_thread_count(), [&](std::size_t job) {
        const std::size_t i = job / boundary;
        const std::size_t j = job % boundary;
        Rational up, down, total;
        for_each_path(net, net.sources()[i], net.sinks()[j], [&](const std::vector<std::size_t>& path) {
            Rational w(1);
            bool ascends = false;
            bool descends = false;
            for (std::size_t e : path) {
                const Edge& edge = net.edges()[e];
                w *= edge.weight;
                ascends |= edge.to.level > edge.from.level;
                descends |= edge.to.level < edge.from.level;
            }
            total += w;
            if (!descends) up += w;
            if (!ascends) down += w;
        });
        report.up(i, j) = up;
        report.down(i, j) = down;
        report.total(i, j) = total;
    });

    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            const auto r = static_cast<std::size_t>(i - 1);
            const auto c = static_cast<std::size_t>(j - 1);
            auto compare = [&](const char* what, const Rational& observed, const BigInt& expected) {
                if (observed != Rational(expected)) {
                    report.mismatches.push_back({what, i, j, observed, Rational(expected)});
                }
            };
            compare("up", report.up(r, c), expected_up(i, j, m));
            compare("down", report.down(r, c), expected_down(i, j, m));
            compare("total", report.total(r, c), closed_form_entry(i, j, m));
        }
    }
    return report;
}

} // namespace fujimoto
