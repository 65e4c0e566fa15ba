#include "metset/accmetric.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "metset/kernels.hpp"
#include "metset/oracle.hpp"
#include "metset/paths.hpp"

namespace metset {

GeodesicIndex::GeodesicIndex(const Graph& g, const DistanceMatrix& d) : n_(g.order()) {
    require_bitset_capacity(g);
    through_.resize(static_cast<std::size_t>(n_) + 1);
    for_each_geodesic(g, d, /*include_edges=*/true, [&](std::span<const int> p) {
        VertexSet set;
        for (int v : p) set.insert(v);
        for (int v : p) through_[v].push_back(set);
        ++total_;
    });
    size_end_.resize(static_cast<std::size_t>(n_) + 1);
    for (int t = 1; t <= n_; ++t) {
        auto& sets = through_[t];
        std::stable_sort(sets.begin(), sets.end(),
                         [](const VertexSet& a, const VertexSet& b) { return a.count() < b.count(); });
        auto& ends = size_end_[t];
        ends.assign(static_cast<std::size_t>(n_) + 2, 0);
        std::size_t pos = 0;
        for (int c = 0; c <= n_ + 1; ++c) {
            while (pos < sets.size() && sets[pos].count() <= c) ++pos;
            ends[c] = pos;
        }
    }
}

std::span<const VertexSet> GeodesicIndex::through(int t, int max_vertices) const {
    const auto c = static_cast<std::size_t>(std::clamp(max_vertices, 0, n_ + 1));
    return {through_[t].data(), size_end_[t][c]};
}

bool extend_check(const GeodesicIndex& index, const VertexSet& x, int t) {
    VertexSet universe = x;
    universe.insert(t);
    VertexSet covered = kernels::union_of_subsets(index.through(t, universe.count()), universe);
    covered.erase(t);
    return covered == x;
}

VertexSet avoid_set(std::size_t i, const AccLevel& level) {
    if (i >= level.sets.size()) throw std::out_of_range("avoid_set index past the level");
    const VertexSet& xi = level.sets[i];
    VertexSet avoid;
    for (std::size_t j = 0; j < i; ++j) {
        const VertexSet diff = level.sets[j] - xi;
        if (diff.count() == 1) avoid |= diff;
    }
    return avoid;
}

std::vector<AccLevel> acc_metric_enumerate(const Graph& g, std::optional<int> max_card) {
    require_bitset_capacity(g);
    const int n = g.order();
    if (max_card && *max_card < 0) throw std::invalid_argument("cardinality bound must be non-negative");
    const int limit = max_card ? std::min(*max_card, n) : n;

    std::vector<AccLevel> levels;
    if (limit < 1) return levels;
    const DistanceMatrix d = all_pairs_distances(g);
    const GeodesicIndex index(g, d);
    const VertexSet everything = VertexSet::prefix(n);

    AccLevel first{1, {}};
    for (int v = 1; v <= n; ++v) first.sets.push_back(VertexSet{v});
    levels.push_back(std::move(first));

    while (levels.back().k < limit) {
        const AccLevel& cur = levels.back();
        AccLevel next{cur.k + 1, {}};
        for (std::size_t i = 0; i < cur.sets.size(); ++i) {
            const VertexSet& xi = cur.sets[i];
            const VertexSet candidates = everything - xi - avoid_set(i, cur);
            candidates.for_each([&](int y) {
                if (extend_check(index, xi, y)) {
                    VertexSet grown = xi;
                    grown.insert(y);
                    next.sets.push_back(grown);
                }
            });
        }
        if (next.sets.empty()) break;
        std::sort(next.sets.begin(), next.sets.end(), lex_less);
        levels.push_back(std::move(next));
    }
    return levels;
}

namespace {

bool acc_memo(const Graph& g, const DistanceMatrix& d, const VertexSet& x,
              std::unordered_map<VertexSet, bool, VertexSetHash>& memo) {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    bool result = false;
    const int size = x.count();
    if (size == 1) {
        result = true;
    } else if (size > 1 && is_metric(g, d, x)) {
        const auto members = x.to_vector();
        result = std::any_of(members.begin(), members.end(), [&](int v) {
            VertexSet smaller = x;
            smaller.erase(v);
            return acc_memo(g, d, smaller, memo);
        });
    }
    memo.emplace(x, result);
    return result;
}

}  // namespace

bool is_acc_metric_oracle(const Graph& g, const VertexSet& x) {
    require_bitset_capacity(g);
    if (!x.subset_of(VertexSet::prefix(g.order()))) throw std::out_of_range("vertex outside the graph");
    const DistanceMatrix d = all_pairs_distances(g);
    std::unordered_map<VertexSet, bool, VertexSetHash> memo;
    return acc_memo(g, d, x, memo);
}

}  // namespace metset
