#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "metset/graph.hpp"

namespace metset {

/// Ordered vertex sequence (v0, ..., vk).
using Path = std::vector<int>;
using PathCallback = std::function<void(std::span<const int>)>;

/// Vertices lying on some s-t geodesic: { v : d(s,v) + d(v,t) = d(s,t) },
/// sorted ascending. Throws std::invalid_argument if s == t or unreachable.
std::vector<int> interval(const Graph& g, const DistanceMatrix& d, int s, int t);

/// Streams every geodesic (v0, ..., vk) with v0 < vk. Geodesics of length 1
/// (edges) are skipped unless `include_edges`. Order: by start vertex, then
/// lexicographic on the vertex sequence.
void for_each_geodesic(const Graph& g, const DistanceMatrix& d, bool include_edges, const PathCallback& emit);

/// Streams the s-t geodesics in lexicographic order (s != t, any orientation).
void for_each_geodesic_between(const Graph& g, const DistanceMatrix& d, int s, int t, const PathCallback& emit);

std::vector<Path> all_geodesics(const Graph& g, const DistanceMatrix& d, bool include_edges);

/// Streams every chordless path of length >= 2 with v0 < vk, in the same
/// order as for_each_geodesic. Endpoints of such paths are never adjacent.
void for_each_chordless_path(const Graph& g, const PathCallback& emit);

std::vector<Path> all_chordless_paths(const Graph& g);

/// One path per line, vertices separated by single spaces.
void write_paths(std::ostream& out, std::span<const Path> paths);

}  // namespace metset
