#include <doctest.h>

#include <set>

#include "metset/graph.hpp"
#include "support/fixtures.hpp"

using namespace metset;
using metset::testing::floyd;
using metset::testing::g5;

namespace {

GraphError::Kind error_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const GraphError& e) {
        return e.kind();
    }
    FAIL("expected a GraphError");
    return GraphError::Kind::invalid_parameter;
}

std::size_t leaf_count(const Graph& g) {
    std::size_t c = 0;
    for (int v = 1; v <= g.order(); ++v) c += g.degree(v) == 1;
    return c;
}

}  // namespace

TEST_CASE("build_graph validates input") {
    const Graph g = g5();
    CHECK(g.order() == 6);
    CHECK(g.size() == 10);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {2, 6}, {3, 4}, {3, 5}})
        CHECK_FALSE(g.adjacent(u, v));
    CHECK(g.adjacent(6, 3));
    CHECK(g.neighbors(1).size() == 4);

    const Graph single = build_graph(1, {});
    CHECK(single.order() == 1);
    CHECK(single.size() == 0);

    CHECK(error_kind([] { build_graph(3, {{1, 2}, {1, 2}}); }) == GraphError::Kind::duplicate_edge);
    CHECK(error_kind([] { build_graph(3, {{1, 2}, {2, 1}}); }) == GraphError::Kind::duplicate_edge);
    CHECK(error_kind([] { build_graph(3, {{2, 2}}); }) == GraphError::Kind::self_loop);
    CHECK(error_kind([] { build_graph(3, {{1, 4}}); }) == GraphError::Kind::vertex_out_of_range);
    CHECK(error_kind([] { build_graph(0, {}); }) == GraphError::Kind::invalid_order);
}

TEST_CASE("all_pairs_distances") {
    const Graph g = g5();
    const auto d = all_pairs_distances(g);
    CHECK(d.at(1, 3) == 2);
    CHECK(d.at(2, 3) == 3);
    CHECK(d.at(3, 3) == 0);

    CHECK(all_pairs_distances(metset::testing::path_graph(3)).at(1, 3) == 2);

    const auto iso = all_pairs_distances(build_graph(2, {}));
    CHECK(iso.at(1, 2) == DistanceMatrix::kInfinity);
    CHECK_FALSE(iso.reachable(1, 2));
    CHECK(DistanceMatrix::kInfinity > 1000u);
}

TEST_CASE("distance matrix properties on random graphs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 2 + static_cast<int>(seed % 19);
        const long long m = static_cast<long long>(seed * 7 % (n * (n - 1) / 2 + 1));
        const Graph g = random_graph(n, m, seed);
        const auto d = all_pairs_distances(g);
        const auto ref = floyd(g);
        for (int u = 1; u <= n; ++u) {
            CHECK(d.at(u, u) == 0);
            for (int v = 1; v <= n; ++v) {
                CHECK(d.at(u, v) == d.at(v, u));
                CHECK((d.at(u, v) == 1) == g.adjacent(u, v));
                if (ref[u][v] < 0) CHECK_FALSE(d.reachable(u, v));
                else CHECK(d.at(u, v) == static_cast<std::uint32_t>(ref[u][v]));
                for (int w = 1; w <= n; ++w)
                    if (d.reachable(u, v) && d.reachable(v, w)) CHECK(d.at(u, w) <= d.at(u, v) + d.at(v, w));
            }
        }
    }
}

TEST_CASE("random_graph") {
    const Graph g = random_graph(40, 100, 680);
    CHECK(g.order() == 40);
    CHECK(g.size() == 100);
    CHECK(random_graph(5, 10, 3) == metset::testing::complete_graph(5));
    CHECK(random_graph(12, 20, 9) == random_graph(12, 20, 9));
    CHECK_FALSE(random_graph(12, 20, 9) == random_graph(12, 20, 10));
    CHECK(random_graph(7, 0, 1).size() == 0);

    const Graph c = random_graph(15, 16, 4, /*connected=*/true);
    CHECK(is_connected_graph(c));

    CHECK(error_kind([] { random_graph(5, 11, 1); }) == GraphError::Kind::invalid_parameter);
    CHECK(error_kind([] { random_graph(5, -1, 1); }) == GraphError::Kind::invalid_parameter);
    CHECK(error_kind([] { random_graph(20, 3, 1, true); }) == GraphError::Kind::invalid_parameter);
}

TEST_CASE("random_tree") {
    const Graph t = random_tree(60, 25, 1711);
    CHECK(t.order() == 60);
    CHECK(t.size() == 59);
    CHECK(is_connected_graph(t));
    CHECK(leaf_count(t) == 25);

    const Graph p = random_tree(3, 2, 5);
    CHECK(p.size() == 2);
    CHECK(leaf_count(p) == 2);

    const Graph star = random_tree(10, 9, 5);
    int hubs = 0;
    for (int v = 1; v <= 10; ++v) hubs += star.degree(v) == 9;
    CHECK(hubs == 1);
    CHECK(leaf_count(star) == 9);

    // a path: exactly two leaves
    const Graph path = random_tree(30, 2, 8);
    CHECK(leaf_count(path) == 2);
    CHECK(is_connected_graph(path));

    CHECK(random_tree(20, 7, 3) == random_tree(20, 7, 3));

    CHECK(error_kind([] { random_tree(2, 2, 1); }) == GraphError::Kind::infeasible_leaf_count);
    CHECK(error_kind([] { random_tree(10, 10, 1); }) == GraphError::Kind::infeasible_leaf_count);
    CHECK(error_kind([] { random_tree(10, 1, 1); }) == GraphError::Kind::infeasible_leaf_count);
}

TEST_CASE("random_tree properties") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = 3 + static_cast<int>(seed % 30);
        const int leaves = 2 + static_cast<int>(seed * 13 % static_cast<std::uint64_t>(n - 2));
        const Graph t = random_tree(n, leaves, seed);
        CHECK(t.size() == n - 1);
        CHECK(is_connected_graph(t));  // connected with n-1 edges: acyclic
        CHECK(leaf_count(t) == static_cast<std::size_t>(leaves));
    }
}

TEST_CASE("random_tree is spread over the leaf-count class") {
    // Labelled trees on 5 vertices with 3 leaves: 5 * 4 * 3 = 60 (a path
    // shape with a spur). Uniform sampling should hit all of them.
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t seed = 0; seed < 3000; ++seed) seen.insert(random_tree(5, 3, seed).edges());
    CHECK(seen.size() == 60);
}

TEST_CASE("graph text format") {
    const Graph g = g5();
    const std::string text = write_graph(g);
    CHECK(text.substr(0, 5) == "6 10\n");
    CHECK(parse_graph(text) == g);
    CHECK(write_graph(parse_graph(text)) == text);

    // comments, blank lines, reversed endpoints
    const Graph h = parse_graph("# comment\n\n3 2\n2 1\n# x\n3 2\n");
    CHECK(write_graph(h) == "3 2\n1 2\n2 3\n");

    CHECK(parse_graph("1 0\n").order() == 1);
    CHECK(error_kind([] { parse_graph("2 1\n1 3\n"); }) == GraphError::Kind::vertex_out_of_range);
    CHECK(error_kind([] { parse_graph("two 1\n"); }) == GraphError::Kind::malformed_header);
    CHECK(error_kind([] { parse_graph("3\n"); }) == GraphError::Kind::malformed_header);
    CHECK(error_kind([] { parse_graph(""); }) == GraphError::Kind::malformed_header);
    CHECK(error_kind([] { parse_graph("3 1\n1 2 3\n"); }) == GraphError::Kind::malformed_edge_line);
    CHECK(error_kind([] { parse_graph("3 1\n1 x\n"); }) == GraphError::Kind::malformed_edge_line);
    CHECK(error_kind([] { parse_graph("3 2\n1 2\n"); }) == GraphError::Kind::edge_count_mismatch);
    CHECK(error_kind([] { parse_graph("3 1\n1 1\n"); }) == GraphError::Kind::self_loop);
}

TEST_CASE("parse and write round-trip on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_graph(3 + static_cast<int>(seed % 20), static_cast<long long>(seed % 3), seed);
        CHECK(parse_graph(write_graph(g)) == g);
    }
}
