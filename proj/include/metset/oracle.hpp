#pragma once

// Brute-force reference implementations of the set-family definitions.
// Everything here follows the definitions literally and shares no code with
// the superclause engine.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metset/constraints.hpp"
#include "metset/graph.hpp"
#include "metset/vertex_set.hpp"

namespace metset {

/// brute_family scans all 2^n subsets and refuses larger graphs.
inline constexpr int kOracleMaxVertices = 22;

/// Hop count of a shortest s-t path inside G[X]; DistanceMatrix::kInfinity
/// when s and t are disconnected within X. Throws std::invalid_argument if
/// s or t is not in X.
std::uint32_t dist_in_subset(const Graph& g, const VertexSet& x, int s, int t);

/// dist_X(s,t) = dist_V(s,t) for all s, t in X.
bool is_metric(const Graph& g, const VertexSet& x);
bool is_metric(const Graph& g, const DistanceMatrix& d, const VertexSet& x);

/// X contains every vertex of every geodesic between two of its members.
bool is_geconv(const Graph& g, const VertexSet& x);
bool is_geconv(const Graph& g, const DistanceMatrix& d, const VertexSet& x);

/// G[X] is connected; the empty set counts as connected.
bool is_connected(const Graph& g, const VertexSet& x);

bool in_family(const Graph& g, const DistanceMatrix& d, Family family, const VertexSet& x);

struct FamilyReport {
    Family family = Family::metric;
    /// Ascending bitmask order.
    std::vector<VertexSet> members;
    std::size_t count = 0;
    /// histogram[c] = members of size c.
    std::vector<std::size_t> histogram;
};

FamilyReport brute_family(const Graph& g, Family family, std::optional<int> max_card = std::nullopt);

/// Every connected set is metric (checked by brute force, n <= 16).
bool is_distance_hereditary_small(const Graph& g);

/// "101100" for {1,3,4} when n = 6.
std::string to_bitstring(const VertexSet& x, int n);

}  // namespace metset
