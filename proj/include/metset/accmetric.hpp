#pragma once

#include <optional>
#include <span>
#include <vector>

#include "metset/graph.hpp"
#include "metset/vertex_set.hpp"

namespace metset {

/// The acc-metric sets of one cardinality, in lexicographic order of their
/// sorted vertex lists.
struct AccLevel {
    int k = 0;
    std::vector<VertexSet> sets;
};

/// Vertex sets of all geodesics, edges included, indexed by member vertex and
/// sorted by size so that "geodesics through t with at most c vertices" is a
/// prefix.
class GeodesicIndex {
public:
    GeodesicIndex(const Graph& g, const DistanceMatrix& d);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] std::size_t geodesic_count() const { return total_; }
    [[nodiscard]] std::span<const VertexSet> through(int t, int max_vertices) const;

private:
    int n_ = 0;
    std::size_t total_ = 0;
    std::vector<std::vector<VertexSet>> through_;  // indexed 1..n
    std::vector<std::vector<std::size_t>> size_end_;  // size_end_[t][c]: sets with <= c vertices
};

/// Book-keeping test for one extension of a metric set X by t not in X:
/// B_t collects P \ {t} over the geodesics P through t that lie in X + t,
/// and X + t is metric iff B_t = X.
bool extend_check(const GeodesicIndex& index, const VertexSet& x, int t);

/// { y : some earlier set X_j of the level has X_j \ X_i = {y} }, where i is
/// 0-based. Extending X_i by such a y would repeat an earlier extension.
VertexSet avoid_set(std::size_t i, const AccLevel& level);

/// Level-wise enumeration: singletons first, then each level extends every
/// set by the vertices outside it and outside its avoid set that pass
/// extend_check. Stops at max_card or at the first empty level.
std::vector<AccLevel> acc_metric_enumerate(const Graph& g, std::optional<int> max_card = std::nullopt);

/// Recursive reference: X is acc-metric iff X is metric and either |X| = 1
/// or X \ {x} is acc-metric for some x. The empty set is not acc-metric.
bool is_acc_metric_oracle(const Graph& g, const VertexSet& x);

}  // namespace metset
