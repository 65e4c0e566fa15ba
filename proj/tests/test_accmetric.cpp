#include <doctest.h>

#include <unordered_set>

#include "metset/accmetric.hpp"
#include "metset/oracle.hpp"
#include "support/fixtures.hpp"

using namespace metset;
using namespace metset::testing;

namespace {

std::vector<VertexSet> flatten(const std::vector<AccLevel>& levels) {
    std::vector<VertexSet> out;
    for (const auto& level : levels) out.insert(out.end(), level.sets.begin(), level.sets.end());
    return sorted_sets(out);
}

std::vector<VertexSet> oracle_sets(const Graph& g, std::optional<int> k = std::nullopt) {
    std::vector<VertexSet> out;
    for (const auto& x : power_set(g.order()))
        if ((!k || x.count() <= *k) && is_acc_metric_oracle(g, x)) out.push_back(x);
    return sorted_sets(out);
}

// Level-wise closure with a hash set for deduplication instead of avoid sets.
std::vector<VertexSet> hashed_levels(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> all;
    std::unordered_set<VertexSet, VertexSetHash> level;
    for (int v = 1; v <= n; ++v) level.insert(VertexSet{v});
    while (!level.empty()) {
        all.insert(all.end(), level.begin(), level.end());
        std::unordered_set<VertexSet, VertexSetHash> next;
        for (const auto& x : level)
            for (int t = 1; t <= n; ++t) {
                if (x.contains(t)) continue;
                VertexSet y = x;
                y.insert(t);
                if (is_metric(g, y)) next.insert(y);
            }
        level = std::move(next);
    }
    return sorted_sets(all);
}

}  // namespace

TEST_CASE("extend_check on the five-cycle") {
    const Graph c5 = cycle_graph(5);
    const GeodesicIndex index(c5, all_pairs_distances(c5));
    CHECK(index.order() == 5);
    CHECK(index.geodesic_count() == 10);  // 5 edges and 5 two-step paths
    CHECK(extend_check(index, VertexSet{1, 2}, 3));
    CHECK_FALSE(extend_check(index, VertexSet{1, 2}, 4));
    CHECK(extend_check(index, VertexSet{1}, 2));
    CHECK_FALSE(extend_check(index, VertexSet{1}, 3));
    // closing the cycle gives V, which is metric
    CHECK(extend_check(index, VertexSet{1, 2, 3, 4}, 5));
}

TEST_CASE("extend_check agrees with the metric test") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_graph(9, 13, seed, true);
        const auto d = all_pairs_distances(g);
        const GeodesicIndex index(g, d);
        for (const auto& x : power_set(9)) {
            if (x.empty() || !is_metric(g, d, x)) continue;
            for (int t = 1; t <= 9; ++t) {
                if (x.contains(t)) continue;
                VertexSet y = x;
                y.insert(t);
                CHECK(extend_check(index, x, t) == is_metric(g, d, y));
            }
        }
    }
}

TEST_CASE("avoid_set") {
    const AccLevel level{2, {{1, 2}, {1, 3}, {2, 3}}};
    CHECK(avoid_set(0, level).empty());
    CHECK(avoid_set(1, level) == VertexSet{2});
    CHECK(avoid_set(2, level) == VertexSet{1});
    CHECK_THROWS_AS(avoid_set(3, level), std::out_of_range);

    const AccLevel far{2, {{1, 2}, {4, 5}, {1, 5}}};
    CHECK(avoid_set(1, far).empty());
    CHECK(avoid_set(2, far) == (VertexSet{2, 4}));
}

TEST_CASE("acc-metric sets of small graphs") {
    const auto c5 = acc_metric_enumerate(cycle_graph(5));
    const auto c5_sets = flatten(c5);
    CHECK(c5_sets.size() == 15);  // 5 singletons, 5 edges, 5 three-vertex paths
    CHECK(std::find(c5_sets.begin(), c5_sets.end(), VertexSet::prefix(5)) == c5_sets.end());
    CHECK(is_metric(cycle_graph(5), VertexSet::prefix(5)));
    CHECK_FALSE(is_acc_metric_oracle(cycle_graph(5), VertexSet::prefix(5)));
    for (const auto& level : c5) {
        CHECK(std::is_sorted(level.sets.begin(), level.sets.end(), lex_less));
        for (const auto& x : level.sets) CHECK(x.count() == level.k);
    }

    const auto k5 = flatten(acc_metric_enumerate(complete_graph(5)));
    CHECK(k5.size() == 31);

    CHECK_FALSE(is_acc_metric_oracle(g5(), VertexSet{}));
    CHECK(flatten(acc_metric_enumerate(g5())) == oracle_sets(g5()));
}

TEST_CASE("acc-metric sets of trees are the subtrees") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph t = random_tree(10, 2 + static_cast<int>(seed % 7), seed);
        std::vector<VertexSet> subtrees;
        for (const auto& x : power_set(10))
            if (!x.empty() && is_connected(t, x)) subtrees.push_back(x);
        CHECK(flatten(acc_metric_enumerate(t)) == sorted_sets(subtrees));
    }
}

TEST_CASE("level-wise enumeration matches the recursive definition") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 4 + static_cast<int>(seed % 6);
        const long long max_m = n * (n - 1) / 2;
        const Graph g = random_graph(n, std::min<long long>(max_m, n + static_cast<long long>(seed % 7)), seed + 300, true);
        const auto got = flatten(acc_metric_enumerate(g));
        CHECK(got == oracle_sets(g));
        CHECK(got == hashed_levels(g));

        const auto bounded = acc_metric_enumerate(g, 3);
        CHECK(bounded.size() <= 3);
        CHECK(flatten(bounded) == oracle_sets(g, 3));
    }
}

TEST_CASE("acc-metric equals metric on distance-hereditary graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_graph(8, 9 + static_cast<long long>(seed % 8), seed + 700, true);
        if (!is_distance_hereditary_small(g)) continue;
        auto metric = brute_family(g, Family::metric).members;
        std::erase_if(metric, [](const VertexSet& x) { return x.empty(); });
        CHECK(flatten(acc_metric_enumerate(g)) == sorted_sets(metric));
    }
}
