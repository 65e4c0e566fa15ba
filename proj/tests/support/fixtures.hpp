#pragma once

// Shared fixtures and brute-force helpers for the test suites. Nothing here
// calls into the path or engine code it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "metset/engine.hpp"
#include "metset/graph.hpp"
#include "metset/vertex_set.hpp"

namespace metset::testing {

/// All pairs except {1,3}, {2,3}, {2,6}, {3,4}, {3,5}.
inline Graph g5() {
    return build_graph(6, {{1, 2}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

inline Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.push_back({v, v + 1});
    return build_graph(n, e);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.push_back({v, v + 1});
    e.push_back({1, n});
    return build_graph(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) e.push_back({u, v});
    return build_graph(n, e);
}

/// Floyd-Warshall, 0-padded (index 0 unused); -1 for unreachable.
inline std::vector<std::vector<int>> floyd(const Graph& g) {
    const int n = g.order();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, inf));
    for (int v = 1; v <= n; ++v) d[v][v] = 0;
    for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (auto& x : row)
            if (x >= inf) x = -1;
    return d;
}

/// Every simple path from s to t, by unpruned DFS.
inline std::vector<std::vector<int>> simple_paths(const Graph& g, int s, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> path{s};
    std::vector<char> used(g.order() + 1, 0);
    used[s] = 1;
    std::function<void()> dfs = [&] {
        const int v = path.back();
        if (v == t) {
            out.push_back(path);
            return;
        }
        for (const auto& e : g.edges()) {
            int u = 0;
            if (e.u == v) u = e.v;
            else if (e.v == v) u = e.u;
            else continue;
            if (used[u]) continue;
            used[u] = 1;
            path.push_back(u);
            dfs();
            path.pop_back();
            used[u] = 0;
        }
    };
    dfs();
    std::sort(out.begin(), out.end());
    return out;
}

inline bool has_edge(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    return std::find(g.edges().begin(), g.edges().end(), Edge{u, v}) != g.edges().end();
}

inline std::vector<VertexSet> sorted_sets(std::vector<VertexSet> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// Every member of every row, sorted.
inline std::vector<VertexSet> expand_family(const EsopFamily& fam, std::optional<int> k = std::nullopt) {
    std::vector<VertexSet> out;
    for (const auto& r : fam.rows) {
        auto part = expand_row(r, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return sorted_sets(std::move(out));
}

inline bool pairwise_disjoint(const std::vector<Row012>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (!rows_disjoint(rows[i], rows[j])) return false;
    return true;
}

/// All subsets of {1..n} as VertexSets, n <= 20.
inline std::vector<VertexSet> power_set(int n) {
    std::vector<VertexSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(VertexSet::from_mask(m));
    return out;
}

}  // namespace metset::testing
