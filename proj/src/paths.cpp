#include "metset/paths.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace metset {

std::vector<int> interval(const Graph& g, const DistanceMatrix& d, int s, int t) {
    if (s == t) throw std::invalid_argument("interval needs distinct endpoints");
    if (!d.reachable(s, t))
        throw std::invalid_argument("vertices " + std::to_string(s) + " and " + std::to_string(t) +
                                    " are not connected");
    const auto st = d.at(s, t);
    std::vector<int> out;
    for (int v = 1; v <= g.order(); ++v)
        if (d.reachable(s, v) && d.reachable(v, t) && d.at(s, v) + d.at(v, t) == st) out.push_back(v);
    return out;
}

void for_each_geodesic(const Graph& g, const DistanceMatrix& d, bool include_edges, const PathCallback& emit) {
    // Every path that moves one BFS layer further from s at each step is a
    // geodesic from s to its current end vertex.
    Path path;
    path.reserve(static_cast<std::size_t>(g.order()));
    std::function<void(int)> extend = [&](int s) {
        const int v = path.back();
        const auto dv = d.at(s, v);
        for (int u : g.neighbors(v)) {
            if (d.at(s, u) != dv + 1) continue;
            path.push_back(u);
            if (u > s && (include_edges || path.size() >= 3)) emit(path);
            extend(s);
            path.pop_back();
        }
    };
    for (int s = 1; s <= g.order(); ++s) {
        path.assign(1, s);
        extend(s);
    }
}

void for_each_geodesic_between(const Graph& g, const DistanceMatrix& d, int s, int t, const PathCallback& emit) {
    if (s == t || !d.reachable(s, t)) return;
    Path path{s};
    std::function<void()> extend = [&]() {
        const int v = path.back();
        if (v == t) {
            emit(path);
            return;
        }
        const auto dvt = d.at(v, t);
        for (int u : g.neighbors(v)) {
            if (d.at(u, t) + 1 != dvt) continue;
            path.push_back(u);
            extend();
            path.pop_back();
        }
    };
    extend();
}

std::vector<Path> all_geodesics(const Graph& g, const DistanceMatrix& d, bool include_edges) {
    std::vector<Path> out;
    for_each_geodesic(g, d, include_edges, [&](std::span<const int> p) { out.emplace_back(p.begin(), p.end()); });
    return out;
}

void for_each_chordless_path(const Graph& g, const PathCallback& emit) {
    const int n = g.order();
    // blocked[w]: number of path vertices other than the last one adjacent to w
    std::vector<int> blocked(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> on_path(static_cast<std::size_t>(n) + 1, 0);
    Path path;
    path.reserve(static_cast<std::size_t>(n));

    std::function<void(int)> extend = [&](int s) {
        const int v = path.back();
        for (int u : g.neighbors(v)) {
            if (on_path[u] || blocked[u] != 0) continue;
            for (int w : g.neighbors(v)) ++blocked[w];
            path.push_back(u);
            on_path[u] = 1;
            if (u > s && path.size() >= 3) emit(path);
            extend(s);
            on_path[u] = 0;
            path.pop_back();
            for (int w : g.neighbors(v)) --blocked[w];
        }
    };
    for (int s = 1; s <= n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend(s);
        on_path[s] = 0;
    }
}

std::vector<Path> all_chordless_paths(const Graph& g) {
    std::vector<Path> out;
    for_each_chordless_path(g, [&](std::span<const int> p) { out.emplace_back(p.begin(), p.end()); });
    return out;
}

void write_paths(std::ostream& out, std::span<const Path> paths) {
    for (const auto& p : paths) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i != 0) out << ' ';
            out << p[i];
        }
        out << '\n';
    }
}

}  // namespace metset
