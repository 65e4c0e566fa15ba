#include "metset/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <functional>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_set>

namespace metset {

Graph Graph::build(int n, std::vector<Edge> edges) {
    if (n < 1) throw GraphError(GraphError::Kind::invalid_order, "vertex count must be at least 1");
    for (auto& e : edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw GraphError(GraphError::Kind::vertex_out_of_range,
                             "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 "} has an endpoint outside 1.." + std::to_string(n));
        if (e.u == e.v)
            throw GraphError(GraphError::Kind::self_loop, "self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw GraphError(GraphError::Kind::duplicate_edge,
                         "duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : g.edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (int v = 1; v <= n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adjacency_.resize(2 * g.edges_.size());
    std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : g.edges_) {
        g.adjacency_[fill[e.u]++] = e.v;
        g.adjacency_[fill[e.v]++] = e.u;
    }
    for (int v = 1; v <= n; ++v)
        std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1]);
    return g;
}

bool Graph::adjacent(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(int n, std::vector<Edge> edges) { return Graph::build(n, std::move(edges)); }

void require_bitset_capacity(const Graph& g) {
    if (g.order() > kMaxVertices)
        throw GraphError(GraphError::Kind::too_many_vertices,
                         "graph has " + std::to_string(g.order()) + " vertices; at most " +
                             std::to_string(kMaxVertices) + " are supported here");
}

std::vector<VertexSet> neighbor_sets(const Graph& g) {
    require_bitset_capacity(g);
    std::vector<VertexSet> out(static_cast<std::size_t>(g.order()) + 1);
    for (const auto& e : g.edges()) {
        out[e.u].insert(e.v);
        out[e.v].insert(e.u);
    }
    return out;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix d(n);
    std::vector<int> queue(static_cast<std::size_t>(n));
    std::vector<std::uint32_t> dist(static_cast<std::size_t>(n) + 1);
    for (int s = 1; s <= n; ++s) {
        std::fill(dist.begin(), dist.end(), DistanceMatrix::kInfinity);
        dist[s] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            const int v = queue[head++];
            for (int u : g.neighbors(v)) {
                if (dist[u] == DistanceMatrix::kInfinity) {
                    dist[u] = dist[v] + 1;
                    queue[tail++] = u;
                }
            }
        }
        for (int t = 1; t <= n; ++t) d.set(s, t, dist[t]);
    }
    return d;
}

bool is_connected_graph(const Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == g.order();
}

namespace {

// Pair index k in lexicographic order of {u < v} over 1..n.
Edge decode_pair(long long k, int n) {
    int u = 1;
    while (k >= n - u) {
        k -= n - u;
        ++u;
    }
    return {u, u + 1 + static_cast<int>(k)};
}

Graph sample_edges(int n, long long m, std::mt19937_64& rng) {
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    // Floyd's algorithm: m distinct indices from [0, total).
    std::unordered_set<long long> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    for (long long j = total - m; j < total; ++j) {
        const long long r = std::uniform_int_distribution<long long>(0, j)(rng);
        if (!chosen.insert(r).second) chosen.insert(j);
    }
    std::vector<long long> idx(chosen.begin(), chosen.end());
    std::sort(idx.begin(), idx.end());
    std::vector<Edge> edges;
    edges.reserve(idx.size());
    for (long long k : idx) edges.push_back(decode_pair(k, n));
    return Graph::build(n, std::move(edges));
}

Graph decode_pruefer(int n, const std::vector<int>& seq) {
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 1);
    for (int v : seq) ++deg[v];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) leaves.push(v);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int v : seq) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.push_back({leaf, v});
        if (--deg[v] == 1) leaves.push(v);
    }
    const int a = leaves.top();
    leaves.pop();
    edges.push_back({a, leaves.top()});
    return Graph::build(n, std::move(edges));
}

}  // namespace

Graph random_graph(int n, long long m, std::uint64_t seed, bool connected) {
    if (n < 1) throw GraphError(GraphError::Kind::invalid_order, "vertex count must be at least 1");
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > total)
        throw GraphError(GraphError::Kind::invalid_parameter,
                         "edge count " + std::to_string(m) + " outside 0.." + std::to_string(total));
    std::mt19937_64 rng(seed);
    if (!connected) return sample_edges(n, m, rng);
    if (m < n - 1)
        throw GraphError(GraphError::Kind::invalid_parameter,
                         "a connected graph on " + std::to_string(n) + " vertices needs at least " +
                             std::to_string(n - 1) + " edges");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = sample_edges(n, m, rng);
        if (is_connected_graph(g)) return g;
    }
    throw GraphError(GraphError::Kind::retry_cap_exceeded, "no connected sample within 1000 attempts");
}

Graph random_tree(int n, int leaves, std::uint64_t seed) {
    if (n < 3 || leaves < 2 || leaves > n - 1)
        throw GraphError(GraphError::Kind::infeasible_leaf_count,
                         "a tree on " + std::to_string(n) + " vertices cannot have " + std::to_string(leaves) +
                             " leaves (need n >= 3 and 2 <= leaves <= n-1)");

    // Leaves are exactly the labels missing from the Pruefer sequence, so we
    // need a uniform sequence of length n-2 with exactly d distinct labels.
    // ways(i, j): normalized number of completions after i positions with j
    // labels seen, where completions must end with exactly d labels.
    const int len = n - 2;
    const int d = n - leaves;
    const std::size_t stride = static_cast<std::size_t>(d) + 2;
    std::vector<long double> ways((static_cast<std::size_t>(len) + 1) * stride, 0.0L);
    auto at = [&](int i, int j) -> long double& { return ways[static_cast<std::size_t>(i) * stride + j]; };
    at(len, d) = 1.0L;
    for (int i = len - 1; i >= 0; --i)
        for (int j = 0; j <= std::min(i, d); ++j)
            at(i, j) = (static_cast<long double>(j) / d) * at(i + 1, j) +
                       (static_cast<long double>(d - j) / d) * at(i + 1, j + 1);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<long double> coin(0.0L, 1.0L);
    std::vector<int> unused(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) unused[v - 1] = v;
    std::vector<int> used;
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        const int j = static_cast<int>(used.size());
        const long double p_new =
            j == d ? 0.0L : (static_cast<long double>(d - j) / d) * at(i + 1, j + 1) / at(i, j);
        if (coin(rng) < p_new) {
            const auto pick = std::uniform_int_distribution<std::size_t>(0, unused.size() - 1)(rng);
            const int v = unused[pick];
            unused[pick] = unused.back();
            unused.pop_back();
            used.push_back(v);
            seq.push_back(v);
        } else {
            const auto pick = std::uniform_int_distribution<std::size_t>(0, used.size() - 1)(rng);
            seq.push_back(used[pick]);
        }
    }
    return decode_pruefer(n, seq);
}

namespace {

bool parse_ints(std::string_view line, std::vector<long long>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{}) return false;
        i = static_cast<std::size_t>(ptr - line.data());
        if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') return false;
        out.push_back(value);
    }
    return true;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::vector<long long> nums;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (is_blank(line) || line.front() == '#') continue;
        if (!have_header) {
            if (!parse_ints(line, nums) || nums.size() != 2 || nums[0] < 1 || nums[1] < 0 ||
                nums[0] > std::numeric_limits<int>::max())
                throw GraphError(GraphError::Kind::malformed_header,
                                 "line " + std::to_string(line_no) + ": expected header \"n m\"");
            n = nums[0];
            m = nums[1];
            have_header = true;
            continue;
        }
        if (!parse_ints(line, nums) || nums.size() != 2)
            throw GraphError(GraphError::Kind::malformed_edge_line,
                             "line " + std::to_string(line_no) + ": expected edge \"u v\"");
        if (nums[0] < 1 || nums[0] > n || nums[1] < 1 || nums[1] > n)
            throw GraphError(GraphError::Kind::vertex_out_of_range,
                             "line " + std::to_string(line_no) + ": endpoint outside 1.." + std::to_string(n));
        edges.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1])});
    }
    if (!have_header) throw GraphError(GraphError::Kind::malformed_header, "missing header \"n m\"");
    if (static_cast<long long>(edges.size()) != m)
        throw GraphError(GraphError::Kind::edge_count_mismatch,
                         "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph::build(static_cast<int>(n), std::move(edges));
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace metset
