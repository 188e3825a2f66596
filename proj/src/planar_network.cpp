#include "fujimoto/planar_network.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace fujimoto {

PlanarNetwork::PlanarNetwork(std::vector<Vertex> vertices, std::vector<Edge> edges,
                             std::vector<Vertex> sources, std::vector<Vertex> sinks)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      sources_(std::move(sources)),
      sinks_(std::move(sinks)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw PreconditionError("duplicate vertex in network");
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        index_.emplace(vertices_[i], i);
    }
    std::stable_sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });

    out_.resize(vertices_.size());
    edge_to_.resize(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        const int from = index_of(edge.from);
        const int to = index_of(edge.to);
        if (from < 0 || to < 0) {
            throw PreconditionError("edge endpoint is not a vertex of the network");
        }
        if (edge.to.column <= edge.from.column) {
            throw PreconditionError("edge does not increase the column");
        }
        out_[static_cast<std::size_t>(from)].push_back(e);
        edge_to_[e] = static_cast<std::size_t>(to);
    }
    for (auto& list : out_) {
        std::stable_sort(list.begin(), list.end(), [this](std::size_t a, std::size_t b) {
            const Vertex& x = edges_[a].to;
            const Vertex& y = edges_[b].to;
            return std::tie(x.level, x.column) < std::tie(y.level, y.column);
        });
    }

    auto check_boundary = [this](const std::vector<Vertex>& list, const char* what) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (index_of(list[i]) < 0) {
                throw PreconditionError(std::string(what) + " is not a vertex of the network");
            }
            if (i > 0 && list[i].level <= list[i - 1].level) {
                throw PreconditionError(std::string(what) + " labels must increase with level");
            }
        }
    };
    check_boundary(sources_, "source");
    check_boundary(sinks_, "sink");
}

int PlanarNetwork::index_of(const Vertex& v) const {
    const auto it = index_.find(v);
    return it == index_.end() ? -1 : static_cast<int>(it->second);
}

PlanarNetwork PlanarNetwork::with_weights(const std::function<Rational(const Edge&)>& f) const {
    std::vector<Edge> edges = edges_;
    for (auto& e : edges) {
        e.weight = f(e);
        e.label.clear();
    }
    return PlanarNetwork(vertices_, std::move(edges), sources_, sinks_);
}

ExactMatrix weight_matrix(const PlanarNetwork& net) {
    const auto& sources = net.sources();
    const auto& sinks = net.sinks();
    ExactMatrix x(sources.size(), sinks.size());
    const std::size_t nv = net.vertices().size();
    std::vector<Rational> value(nv);
    for (std::size_t i = 0; i < sources.size(); ++i) {
        std::fill(value.begin(), value.end(), Rational());
        const auto s = static_cast<std::size_t>(net.index_of(sources[i]));
        value[s] = Rational(1);
        // Vertex order is topological because edges increase the column.
        for (std::size_t v = s; v < nv; ++v) {
            if (value[v].is_zero()) {
                continue;
            }
            for (std::size_t e : net.out_edges(v)) {
                const Rational& w = net.edges()[e].weight;
                if (!w.is_zero()) {
                    value[net.edge_target(e)] += value[v] * w;
                }
            }
        }
        for (std::size_t j = 0; j < sinks.size(); ++j) {
            x(i, j) = value[static_cast<std::size_t>(net.index_of(sinks[j]))];
        }
    }
    return x;
}

namespace {

/// Depth-first search over vertex-disjoint path collections along
/// nonzero-weight edges. Source k is routed after sources 0..k-1, to any
/// still unused target; each call to `on_complete` receives the full
/// collection.
class CollectionSearch {
public:
    CollectionSearch(const PlanarNetwork& net, const MinorQuery& q, std::uint64_t step_budget)
        : net_(net), budget_(step_budget), used_(net.vertices().size(), 0) {
        validate_minor_query(q, net.sources().size(), net.sinks().size());
        for (int r : q.rows) {
            sources_.push_back(static_cast<std::size_t>(net.index_of(net.sources()[r - 1])));
        }
        for (int c : q.cols) {
            sinks_.push_back(static_cast<std::size_t>(net.index_of(net.sinks()[c - 1])));
        }
        sink_taken_.assign(sinks_.size(), 0);
        paths_.resize(sources_.size());
        reach_.resize(sources_.size());
    }

    /// `on_complete` returns true to stop the search.
    void run(const std::function<bool(const std::vector<std::vector<std::size_t>>&, const Rational&)>& on_complete) {
        on_complete_ = &on_complete;
        place(0, Rational(1));
    }

private:
    bool place(std::size_t k, const Rational& weight) {
        if (k == sources_.size()) {
            return (*on_complete_)(paths_, weight);
        }
        const std::size_t s = sources_[k];
        if (used_[s]) {
            return false;
        }
        for (std::size_t t = 0; t < sinks_.size(); ++t) {
            if (sink_taken_[t] || used_[sinks_[t]]) {
                continue;
            }
            compute_reach(k, sinks_[t]);
            if (!reach_[k][s]) {
                continue;
            }
            sink_taken_[t] = 1;
            paths_[k].assign(1, s);
            used_[s] = 1;
            const bool stop = extend(k, s, sinks_[t], weight);
            used_[s] = 0;
            sink_taken_[t] = 0;
            if (stop) {
                return true;
            }
        }
        return false;
    }

    bool extend(std::size_t k, std::size_t v, std::size_t target, const Rational& weight) {
        if (++steps_ > budget_) {
            throw BudgetError("path-collection search exceeded its budget of " + std::to_string(budget_) +
                              " steps");
        }
        if (v == target) {
            return place(k + 1, weight);
        }
        const std::vector<char>& reach = reach_[k];
        for (std::size_t e : net_.out_edges(v)) {
            const std::size_t u = net_.edge_target(e);
            const Rational& w = net_.edges()[e].weight;
            if (w.is_zero() || used_[u] || !reach[u]) {
                continue;
            }
            used_[u] = 1;
            paths_[k].push_back(u);
            const bool stop = extend(k, u, target, weight * w);
            paths_[k].pop_back();
            used_[u] = 0;
            if (stop) {
                return true;
            }
        }
        return false;
    }

    /// reach_[k][v]: some unused path of nonzero-weight edges leads v -> target.
    void compute_reach(std::size_t k, std::size_t target) {
        const std::size_t nv = net_.vertices().size();
        auto& reach = reach_[k];
        reach.assign(nv, 0);
        reach[target] = 1;
        for (std::size_t v = target; v-- > 0;) {
            if (used_[v]) {
                continue;
            }
            for (std::size_t e : net_.out_edges(v)) {
                const std::size_t u = net_.edge_target(e);
                if (reach[u] && !net_.edges()[e].weight.is_zero()) {
                    reach[v] = 1;
                    break;
                }
            }
        }
    }

    const PlanarNetwork& net_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    std::vector<std::size_t> sources_;
    std::vector<std::size_t> sinks_;
    std::vector<char> sink_taken_;
    std::vector<char> used_;
    std::vector<std::vector<char>> reach_;
    std::vector<std::vector<std::size_t>> paths_;
    const std::function<bool(const std::vector<std::vector<std::size_t>>&, const Rational&)>* on_complete_ =
        nullptr;
};

/// Number of nonzero-weight paths from vertex `s` into any vertex of `targets`.
BigInt count_paths(const PlanarNetwork& net, std::size_t s, const std::vector<std::size_t>& targets) {
    const std::size_t nv = net.vertices().size();
    std::vector<BigInt> count(nv);
    count[s] = 1;
    for (std::size_t v = s; v < nv; ++v) {
        if (count[v] == 0) {
            continue;
        }
        for (std::size_t e : net.out_edges(v)) {
            if (!net.edges()[e].weight.is_zero()) {
                count[net.edge_target(e)] += count[v];
            }
        }
    }
    BigInt total = 0;
    for (std::size_t t : targets) {
        total += count[t];
    }
    return total;
}

} // namespace

Rational lgv_oracle_minor(const PlanarNetwork& net, const MinorQuery& q, std::uint64_t budget) {
    validate_minor_query(q, net.sources().size(), net.sinks().size());
    std::vector<std::size_t> targets;
    for (int c : q.cols) {
        targets.push_back(static_cast<std::size_t>(net.index_of(net.sinks()[c - 1])));
    }
    BigInt product = 1;
    for (int r : q.rows) {
        product *= count_paths(net, static_cast<std::size_t>(net.index_of(net.sources()[r - 1])), targets);
    }
    if (product > BigInt(static_cast<unsigned long>(budget))) {
        throw BudgetError("path enumeration needs up to " + product.get_str() + " collections, over the budget of " +
                          std::to_string(budget));
    }
    Rational total;
    CollectionSearch search(net, q, ~std::uint64_t{0});
    search.run([&](const auto&, const Rational& w) {
        total += w;
        return false;
    });
    return total;
}

std::optional<PathCollection> find_positive_collection(const PlanarNetwork& net, const MinorQuery& q,
                                                       std::uint64_t budget) {
    std::optional<PathCollection> found;
    CollectionSearch search(net, q, budget);
    search.run([&](const std::vector<std::vector<std::size_t>>& paths, const Rational& w) {
        if (w.sign() <= 0) {
            return false;
        }
        PathCollection c;
        c.weight = w;
        for (const auto& p : paths) {
            std::vector<Vertex> verts;
            for (std::size_t v : p) {
                verts.push_back(net.vertices()[v]);
            }
            c.paths.push_back(std::move(verts));
        }
        found = std::move(c);
        return true;
    });
    return found;
}

void for_each_path(const PlanarNetwork& net, const Vertex& from, const Vertex& to,
                   const std::function<void(const std::vector<std::size_t>&)>& visit, std::uint64_t budget) {
    const int s = net.index_of(from);
    const int t = net.index_of(to);
    if (s < 0 || t < 0) {
        throw PreconditionError("path endpoint is not a vertex of the network");
    }
    const std::size_t nv = net.vertices().size();
    std::vector<char> reach(nv, 0);
    reach[static_cast<std::size_t>(t)] = 1;
    for (std::size_t v = static_cast<std::size_t>(t); v-- > 0;) {
        for (std::size_t e : net.out_edges(v)) {
            if (reach[net.edge_target(e)]) {
                reach[v] = 1;
                break;
            }
        }
    }
    if (!reach[static_cast<std::size_t>(s)]) {
        return;
    }
    std::uint64_t visited = 0;
    std::vector<std::size_t> path;
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
        if (v == static_cast<std::size_t>(t)) {
            if (++visited > budget) {
                throw BudgetError("path enumeration exceeded its budget of " + std::to_string(budget) + " paths");
            }
            visit(path);
            return;
        }
        for (std::size_t e : net.out_edges(v)) {
            const std::size_t u = net.edge_target(e);
            if (!reach[u]) {
                continue;
            }
            path.push_back(e);
            walk(u);
            path.pop_back();
        }
    };
    walk(static_cast<std::size_t>(s));
}

PlanarNetwork build_grid(int n_prime, int n) {
    if (n_prime < 1 || n < 1 || n > n_prime + 1) {
        throw PreconditionError("build_grid needs n' >= 1 and 1 <= n <= n' + 1");
    }
    auto at = [](int x, int y) { return Vertex{x + y, y - x}; };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    for (int x = 1; x <= n_prime + 1; ++x) {
        for (int y = 1; y <= n_prime + 1; ++y) {
            vertices.push_back(at(x, y));
            if (x <= n_prime) {
                edges.push_back({at(x, y), at(x + 1, y), Rational(1), {}});
            }
            if (y <= n_prime) {
                edges.push_back({at(x, y), at(x, y + 1), Rational(1), {}});
            }
        }
    }
    std::vector<Vertex> sources, sinks;
    for (int i = 1; i <= n; ++i) {
        sources.push_back(at(1, i));
        sinks.push_back(at(n_prime - i + 2, n_prime + 1));
    }
    return PlanarNetwork(std::move(vertices), std::move(edges), std::move(sources), std::move(sinks));
}

namespace {

std::string dot_name(const Vertex& v) {
    return "\"c" + std::to_string(v.column) + "_l" + std::to_string(v.level) + "\"";
}

nlohmann::json vertex_json(const Vertex& v) { return {{"column", v.column}, {"level", v.level}}; }

} // namespace

std::string export_dot(const PlanarNetwork& net, std::string_view name) {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    os << "  rankdir=LR;\n";
    for (const auto& v : net.vertices()) {
        os << "  " << dot_name(v) << ";\n";
    }
    for (std::size_t i = 0; i < net.sources().size(); ++i) {
        os << "  " << dot_name(net.sources()[i]) << " [xlabel=\"" << i + 1 << "\"];\n";
    }
    for (std::size_t j = 0; j < net.sinks().size(); ++j) {
        os << "  " << dot_name(net.sinks()[j]) << " [xlabel=\"" << j + 1 << "'\"];\n";
    }
    for (const auto& e : net.edges()) {
        os << "  " << dot_name(e.from) << " -> " << dot_name(e.to) << " [label=\"" << e.display_label()
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

nlohmann::json export_json(const PlanarNetwork& net) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : net.vertices()) {
        j["vertices"].push_back(vertex_json(v));
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : net.edges()) {
        nlohmann::json je = {{"from", vertex_json(e.from)}, {"to", vertex_json(e.to)}, {"weight", e.weight.to_string()}};
        if (!e.label.empty()) {
            je["label"] = e.label;
        }
        j["edges"].push_back(std::move(je));
    }
    j["sources"] = nlohmann::json::array();
    for (const auto& v : net.sources()) {
        j["sources"].push_back(vertex_json(v));
    }
    j["sinks"] = nlohmann::json::array();
    for (const auto& v : net.sinks()) {
        j["sinks"].push_back(vertex_json(v));
    }
    return j;
}

ImportResult import_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("network JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    ImportResult result;
    try {
        auto vertex = [](const nlohmann::json& v) {
            return Vertex{v.at("column").get<int>(), v.at("level").get<int>()};
        };
        std::vector<Vertex> vertices, sources, sinks;
        std::vector<Edge> edges;
        for (const auto& v : j.at("vertices")) {
            vertices.push_back(vertex(v));
        }
        std::size_t idx = 0;
        for (const auto& e : j.at("edges")) {
            const auto text_weight = e.at("weight").get<std::string>();
            bool canonical = true;
            Rational w = Rational::parse(text_weight, &canonical);
            if (!canonical) {
                result.warnings.push_back("edge " + std::to_string(idx) + ": weight \"" + text_weight +
                                          "\" normalized to \"" + w.to_string() + "\"");
            }
            edges.push_back({vertex(e.at("from")), vertex(e.at("to")), std::move(w),
                             e.contains("label") ? e.at("label").get<std::string>() : std::string()});
            ++idx;
        }
        for (const auto& v : j.at("sources")) {
            sources.push_back(vertex(v));
        }
        for (const auto& v : j.at("sinks")) {
            sinks.push_back(vertex(v));
        }
        result.network = PlanarNetwork(std::move(vertices), std::move(edges), std::move(sources), std::move(sinks));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("network JSON schema error: ") + e.what());
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid network: ") + e.what());
    }
    return result;
}

} // namespace fujimoto
