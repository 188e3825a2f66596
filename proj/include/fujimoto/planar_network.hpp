#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fujimoto/errors.hpp"
#include "fujimoto/exact_matrix.hpp"
#include "fujimoto/rational.hpp"

namespace fujimoto {

struct Vertex {
    int column = 0;
    int level = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Edge {
    Vertex from;
    Vertex to;
    Rational weight;
    /// Display label; empty means the canonical weight string. Lets a
    /// network keep unreduced labels such as "4/2".
    std::string label;

    std::string display_label() const { return label.empty() ? weight.to_string() : label; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted directed acyclic graph drawn on (column, level) coordinates.
/// Every edge strictly increases the column, which makes the (column, level)
/// order a topological order. Sources and sinks are listed by increasing
/// level.
class PlanarNetwork {
public:
    PlanarNetwork() = default;
    PlanarNetwork(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Vertex> sources,
                  std::vector<Vertex> sinks);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& sources() const { return sources_; }
    const std::vector<Vertex>& sinks() const { return sinks_; }

    /// Index of v in vertices(), or -1.
    int index_of(const Vertex& v) const;
    /// Indices into edges() leaving vertex index `v`, ordered by target.
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
    std::size_t edge_target(std::size_t e) const { return edge_to_[e]; }

    /// Copy with every edge weight replaced by f(edge).
    PlanarNetwork with_weights(const std::function<Rational(const Edge&)>& f) const;

    friend bool operator==(const PlanarNetwork& a, const PlanarNetwork& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.sources_ == b.sources_ &&
               a.sinks_ == b.sinks_;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Vertex> sources_;
    std::vector<Vertex> sinks_;
    std::map<Vertex, std::size_t> index_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::size_t> edge_to_;
};

/// x(net): entry (i, j) is the weight sum over all paths from source i to
/// sink j, by one dynamic-programming sweep per source.
ExactMatrix weight_matrix(const PlanarNetwork& net);

struct PathCollection {
    std::vector<std::vector<Vertex>> paths;
    Rational weight;
};

inline constexpr std::uint64_t kDefaultPathBudget = 100'000'000;

/// Brute-force minor of the weight matrix: the weight sum over all
/// collections of pairwise vertex-disjoint paths joining the sources
/// q.rows to the sinks q.cols (labels 1-based). Zero-weight edges are
/// skipped. Throws BudgetError when the product over chosen sources of
/// their path counts into the chosen sinks exceeds `budget`.
Rational lgv_oracle_minor(const PlanarNetwork& net, const MinorQuery& q,
                          std::uint64_t budget = kDefaultPathBudget);

/// Some vertex-disjoint collection joining q.rows to q.cols whose weight is
/// strictly positive, or nullopt if none exists. Throws BudgetError if the
/// search visits more than `budget` partial paths.
std::optional<PathCollection> find_positive_collection(const PlanarNetwork& net, const MinorQuery& q,
                                                       std::uint64_t budget = kDefaultPathBudget);

/// Visits every directed path from `from` to `to` as a list of edge
/// indices. Throws BudgetError after `budget` paths.
void for_each_path(const PlanarNetwork& net, const Vertex& from, const Vertex& to,
                   const std::function<void(const std::vector<std::size_t>&)>& visit,
                   std::uint64_t budget = kDefaultPathBudget);

/// The unit-weight n' x n' lattice on points (x, y), 1 <= x, y <= n' + 1,
/// with unit steps in x or y, sources (1, i) and sinks (n' - i + 2, n' + 1)
/// for 1 <= i <= n. Point (x, y) is stored as column x + y, level y - x, so
/// both step kinds advance the column and boundary labels increase with
/// level.
PlanarNetwork build_grid(int n_prime, int n);

std::string export_dot(const PlanarNetwork& net, std::string_view name = "network");

nlohmann::json export_json(const PlanarNetwork& net);

struct ImportResult {
    PlanarNetwork network;
    /// One entry per weight that was not in lowest terms on input.
    std::vector<std::string> warnings;
};

/// Parses the export_json schema. Throws ParseError (with the byte offset
/// for syntax errors) on malformed input.
ImportResult import_json(std::string_view text);

} // namespace fujimoto
