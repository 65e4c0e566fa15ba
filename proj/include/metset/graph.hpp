#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "metset/vertex_set.hpp"

namespace metset {

class GraphError : public std::runtime_error {
public:
    enum class Kind {
        invalid_order,
        self_loop,
        duplicate_edge,
        vertex_out_of_range,
        malformed_header,
        malformed_edge_line,
        edge_count_mismatch,
        invalid_parameter,
        infeasible_leaf_count,
        retry_cap_exceeded,
        too_many_vertices,
    };

    GraphError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Undirected edge with u < v once stored in a Graph.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n. Immutable after construction.
class Graph {
public:
    /// Validates and normalizes (u < v, sorted). Throws GraphError.
    static Graph build(int n, std::vector<Edge> edges);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] int size() const { return static_cast<int>(edges_.size()); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    /// Sorted ascending.
    [[nodiscard]] std::span<const int> neighbors(int v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] bool adjacent(int u, int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_;  // CSR, indexed 0..n+1
    std::vector<int> adjacency_;
};

Graph build_graph(int n, std::vector<Edge> edges);

/// Neighbor sets indexed 1..n (entry 0 unused). Requires n <= kMaxVertices.
std::vector<VertexSet> neighbor_sets(const Graph& g);

/// Throws GraphError::too_many_vertices when g does not fit a VertexSet.
void require_bitset_capacity(const Graph& g);

/// All-pairs hop counts.
class DistanceMatrix {
public:
    /// Strictly larger than any finite distance.
    static constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, kInfinity) {}

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] std::uint32_t at(int s, int t) const { return dist_[index(s, t)]; }
    [[nodiscard]] bool reachable(int s, int t) const { return at(s, t) != kInfinity; }
    void set(int s, int t, std::uint32_t d) { dist_[index(s, t)] = d; }

private:
    [[nodiscard]] std::size_t index(int s, int t) const {
        return static_cast<std::size_t>(s - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(t - 1);
    }

    int n_ = 0;
    std::vector<std::uint32_t> dist_;
};

/// One BFS per vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Uniform m-edge simple graph. With `connected`, resamples (up to 1000
/// times) until the graph is connected.
Graph random_graph(int n, long long m, std::uint64_t seed, bool connected = false);

/// Uniform tree among the labelled trees on n vertices with exactly `leaves`
/// leaves, via a conditioned Pruefer sequence.
Graph random_tree(int n, int leaves, std::uint64_t seed);

/// Text format: "n m" then m lines "u v"; '#' lines and blank lines ignored.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

bool is_connected_graph(const Graph& g);

}  // namespace metset
