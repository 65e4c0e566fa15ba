#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metset/graph.hpp"
#include "metset/paths.hpp"
#include "metset/row.hpp"
#include "metset/vertex_set.hpp"

namespace metset {

enum class Family { metric, geconv, connected };

std::string_view to_string(Family f);
/// Throws std::invalid_argument on an unknown name.
Family parse_family(std::string_view name);

/// Order in which the pair constraints are imposed.
enum class ClauseOrder {
    by_distance,    ///< (dist(s,t), s, t) ascending
    lexicographic,  ///< (s, t) ascending
};

/// not x_s  or  not x_t  or  T_1  or ... or  T_r, each T_i a conjunction of
/// positive literals (a vertex set disjoint from {s, t}).
struct Superclause {
    int s = 0;
    int t = 0;
    std::vector<VertexSet> terms;

    [[nodiscard]] bool satisfied_by(const VertexSet& x) const;
    friend bool operator==(const Superclause&, const Superclause&) = default;
};

struct ConstraintSystem {
    int n = 0;
    Family family = Family::metric;
    std::vector<Superclause> clauses;

    [[nodiscard]] bool satisfied_by(const VertexSet& x) const;
};

/// One clause per non-adjacent pair in a common component; its terms are the
/// interiors of the s-t geodesics. `geodesics` must not contain edges.
ConstraintSystem superclauses_metric(const Graph& g, const DistanceMatrix& d, std::span<const Path> geodesics,
                                     ClauseOrder order = ClauseOrder::by_distance);

/// One single-term clause per non-adjacent reachable pair: interval(s,t) \ {s,t}.
ConstraintSystem superclauses_geconv(const Graph& g, const DistanceMatrix& d,
                                     ClauseOrder order = ClauseOrder::by_distance);

/// Like superclauses_metric with chordless paths in place of geodesics.
ConstraintSystem superclauses_connected(const Graph& g, const DistanceMatrix& d, std::span<const Path> chordless,
                                        ClauseOrder order = ClauseOrder::by_distance);

/// Enumerates the needed paths and builds the system for `family`.
ConstraintSystem build_system(const Graph& g, Family family, ClauseOrder order = ClauseOrder::by_distance);

enum class ClauseStatus {
    satisfied,       ///< s or t fixed to 0, or some term all 1
    open,            ///< s and t both 1; only the positive terms remain
    branch_needed,   ///< s or t still free
};

ClauseStatus clause_status(const Superclause& sc, const Row012& r);

/// "!s !t | {a,b,c} {d,e}"
std::string format_clause(const Superclause& sc);

}  // namespace metset
