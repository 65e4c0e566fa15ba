#include "metset/oracle.hpp"

#include <stdexcept>

namespace metset {

namespace {

void check_vertices(const Graph& g, const VertexSet& x) {
    require_bitset_capacity(g);
    if (!x.subset_of(VertexSet::prefix(g.order()))) throw std::out_of_range("vertex outside the graph");
}

// BFS inside G[X] from s; dist indexed by vertex.
void bfs_within(const Graph& g, const VertexSet& x, int s, std::vector<std::uint32_t>& dist) {
    dist.assign(static_cast<std::size_t>(g.order()) + 1, DistanceMatrix::kInfinity);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int u : g.neighbors(v)) {
            if (x.contains(u) && dist[u] == DistanceMatrix::kInfinity) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
}

}  // namespace

std::uint32_t dist_in_subset(const Graph& g, const VertexSet& x, int s, int t) {
    check_vertices(g, x);
    if (!x.contains(s) || !x.contains(t)) throw std::invalid_argument("endpoints must belong to the subset");
    std::vector<std::uint32_t> dist;
    bfs_within(g, x, s, dist);
    return dist[t];
}

bool is_metric(const Graph& g, const DistanceMatrix& d, const VertexSet& x) {
    check_vertices(g, x);
    std::vector<std::uint32_t> dist;
    bool ok = true;
    x.for_each([&](int s) {
        if (!ok) return;
        bfs_within(g, x, s, dist);
        x.for_each([&](int t) {
            if (dist[t] != d.at(s, t)) ok = false;
        });
    });
    return ok;
}

bool is_metric(const Graph& g, const VertexSet& x) { return is_metric(g, all_pairs_distances(g), x); }

bool is_geconv(const Graph& g, const DistanceMatrix& d, const VertexSet& x) {
    check_vertices(g, x);
    const auto members = x.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const int s = members[i], t = members[j];
            if (!d.reachable(s, t)) continue;
            for (int v = 1; v <= g.order(); ++v) {
                if (x.contains(v) || !d.reachable(s, v)) continue;
                if (d.at(s, v) + d.at(v, t) == d.at(s, t)) return false;
            }
        }
    }
    return true;
}

bool is_geconv(const Graph& g, const VertexSet& x) { return is_geconv(g, all_pairs_distances(g), x); }

bool is_connected(const Graph& g, const VertexSet& x) {
    check_vertices(g, x);
    if (x.empty()) return true;
    std::vector<std::uint32_t> dist;
    bfs_within(g, x, x.first(), dist);
    bool ok = true;
    x.for_each([&](int v) {
        if (dist[v] == DistanceMatrix::kInfinity) ok = false;
    });
    return ok;
}

bool in_family(const Graph& g, const DistanceMatrix& d, Family family, const VertexSet& x) {
    switch (family) {
        case Family::metric: return is_metric(g, d, x);
        case Family::geconv: return is_geconv(g, d, x);
        case Family::connected: return is_connected(g, x);
    }
    return false;
}

FamilyReport brute_family(const Graph& g, Family family, std::optional<int> max_card) {
    const int n = g.order();
    if (n > kOracleMaxVertices)
        throw std::length_error("brute-force scan is limited to " + std::to_string(kOracleMaxVertices) + " vertices");
    const DistanceMatrix d = all_pairs_distances(g);
    FamilyReport report;
    report.family = family;
    report.histogram.assign(static_cast<std::size_t>(n) + 1, 0);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const int size = std::popcount(mask);
        if (max_card && size > *max_card) continue;
        const VertexSet x = VertexSet::from_mask(mask);
        if (!in_family(g, d, family, x)) continue;
        report.members.push_back(x);
        ++report.histogram[size];
    }
    report.count = report.members.size();
    return report;
}

bool is_distance_hereditary_small(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw std::length_error("distance-hereditary brute force is limited to 16 vertices");
    const DistanceMatrix d = all_pairs_distances(g);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const VertexSet x = VertexSet::from_mask(mask);
        if (is_connected(g, x) && !is_metric(g, d, x)) return false;
    }
    return true;
}

std::string to_bitstring(const VertexSet& x, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    x.for_each([&](int v) {
        if (v <= n) out[v - 1] = '1';
    });
    return out;
}

}  // namespace metset
