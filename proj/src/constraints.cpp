#include "metset/constraints.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "metset/kernels.hpp"

namespace metset {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::metric: return "metric";
        case Family::geconv: return "geconv";
        case Family::connected: return "connected";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "metric") return Family::metric;
    if (name == "geconv") return Family::geconv;
    if (name == "connected") return Family::connected;
    throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected metric, geconv or connected)");
}

bool Superclause::satisfied_by(const VertexSet& x) const {
    if (!x.contains(s) || !x.contains(t)) return true;
    return std::any_of(terms.begin(), terms.end(), [&](const VertexSet& term) { return term.subset_of(x); });
}

bool ConstraintSystem::satisfied_by(const VertexSet& x) const {
    return std::all_of(clauses.begin(), clauses.end(), [&](const Superclause& c) { return c.satisfied_by(x); });
}

namespace {

bool term_less(const VertexSet& a, const VertexSet& b) {
    const int ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : lex_less(a, b);
}

void order_clauses(std::vector<Superclause>& clauses, const DistanceMatrix& d, ClauseOrder order) {
    if (order == ClauseOrder::lexicographic) {
        std::sort(clauses.begin(), clauses.end(),
                  [](const Superclause& a, const Superclause& b) { return std::pair(a.s, a.t) < std::pair(b.s, b.t); });
        return;
    }
    std::sort(clauses.begin(), clauses.end(), [&](const Superclause& a, const Superclause& b) {
        return std::tuple(d.at(a.s, a.t), a.s, a.t) < std::tuple(d.at(b.s, b.t), b.s, b.t);
    });
}

// Groups path interiors by endpoint pair into one clause per non-adjacent
// reachable pair.
ConstraintSystem clauses_from_paths(const Graph& g, const DistanceMatrix& d, std::span<const Path> paths,
                                    Family family, ClauseOrder order) {
    require_bitset_capacity(g);
    const int n = g.order();
    std::vector<std::vector<VertexSet>> by_pair(static_cast<std::size_t>(n) * n);
    auto slot = [n](int s, int t) { return static_cast<std::size_t>(s - 1) * n + (t - 1); };
    for (const auto& p : paths) {
        if (p.size() < 3) throw std::invalid_argument("paths feeding superclauses must have length >= 2");
        int s = p.front(), t = p.back();
        if (s > t) std::swap(s, t);
        VertexSet interior;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) interior.insert(p[i]);
        by_pair[slot(s, t)].push_back(interior);
    }

    ConstraintSystem sys;
    sys.n = n;
    sys.family = family;
    for (int s = 1; s <= n; ++s) {
        for (int t = s + 1; t <= n; ++t) {
            if (!d.reachable(s, t) || d.at(s, t) < 2) continue;
            auto& terms = by_pair[slot(s, t)];
            std::sort(terms.begin(), terms.end(), term_less);
            terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
            sys.clauses.push_back({s, t, std::move(terms)});
        }
    }
    order_clauses(sys.clauses, d, order);
    return sys;
}

}  // namespace

ConstraintSystem superclauses_metric(const Graph& g, const DistanceMatrix& d, std::span<const Path> geodesics,
                                     ClauseOrder order) {
    return clauses_from_paths(g, d, geodesics, Family::metric, order);
}

ConstraintSystem superclauses_connected(const Graph& g, const DistanceMatrix& d, std::span<const Path> chordless,
                                        ClauseOrder order) {
    return clauses_from_paths(g, d, chordless, Family::connected, order);
}

ConstraintSystem superclauses_geconv(const Graph& g, const DistanceMatrix& d, ClauseOrder order) {
    require_bitset_capacity(g);
    const int n = g.order();
    ConstraintSystem sys;
    sys.n = n;
    sys.family = Family::geconv;
    for (int s = 1; s <= n; ++s) {
        for (int t = s + 1; t <= n; ++t) {
            if (!d.reachable(s, t) || d.at(s, t) < 2) continue;
            VertexSet term = VertexSet::from_vertices(interval(g, d, s, t));
            term.erase(s);
            term.erase(t);
            sys.clauses.push_back({s, t, {term}});
        }
    }
    order_clauses(sys.clauses, d, order);
    return sys;
}

ConstraintSystem build_system(const Graph& g, Family family, ClauseOrder order) {
    const DistanceMatrix d = all_pairs_distances(g);
    switch (family) {
        case Family::metric: {
            const auto geos = all_geodesics(g, d, false);
            return superclauses_metric(g, d, geos, order);
        }
        case Family::geconv:
            return superclauses_geconv(g, d, order);
        case Family::connected: {
            const auto paths = all_chordless_paths(g);
            return superclauses_connected(g, d, paths, order);
        }
    }
    throw std::invalid_argument("unknown family");
}

ClauseStatus clause_status(const Superclause& sc, const Row012& r) {
    if (r.zeros.contains(sc.s) || r.zeros.contains(sc.t)) return ClauseStatus::satisfied;
    if (kernels::find_subset(sc.terms, r.ones) < sc.terms.size()) return ClauseStatus::satisfied;
    if (r.ones.contains(sc.s) && r.ones.contains(sc.t)) return ClauseStatus::open;
    return ClauseStatus::branch_needed;
}

std::string format_clause(const Superclause& sc) {
    std::ostringstream out;
    out << '!' << sc.s << " !" << sc.t << " |";
    for (const auto& term : sc.terms) out << ' ' << term.to_string();
    return out.str();
}

}  // namespace metset
