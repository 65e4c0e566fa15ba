#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "metset/constraints.hpp"
#include "metset/row.hpp"

namespace metset {

enum class RowOrder {
    deterministic,
    shuffled,  ///< permute the stack after every processed row (needs a seed)
};

struct EngineOptions {
    std::optional<int> max_card;
    std::optional<std::uint64_t> seed;
    int workers = 1;
    RowOrder row_order = RowOrder::deterministic;
};

struct EngineStats {
    std::size_t rows = 0;
    /// Members of all rows, ignoring max_card.
    BigCount models = 0;
    /// Members of size <= max_card, when a bound was given.
    std::optional<BigCount> bounded_models;
    double seconds = 0.0;
    /// Graph parsing and clause construction; filled in by callers.
    double setup_seconds = 0.0;
    std::size_t peak_stack = 0;
    /// Rows popped and branched.
    std::size_t processed = 0;
};

/// Pairwise disjoint 012-rows, each wholly inside Mod(system).
struct EsopFamily {
    int n = 0;
    Family family = Family::metric;
    std::optional<int> max_card;
    std::vector<Row012> rows;
    EngineStats stats;
};

/// Rows of the LIFO stack; `pending` says which clause comes next.
using WorkItem = Row012;

/// Disjoint sons of r whose union is { x in r : x satisfies sc }, in branch
/// order: x_s = 0; then x_s = 1, x_t = 0; then x_s = x_t = 1 together with
/// the orthogonalized positive terms. Returns {r} if sc already holds on r.
std::vector<Row012> impose(const Superclause& sc, const Row012& r);

/// Sons with at most k ones.
std::vector<Row012> k_prune(std::vector<Row012> sons, int k);

/// Round-robin partition into `fac` stacks. Throws std::invalid_argument if fac < 1.
std::vector<std::vector<WorkItem>> split_work(std::vector<WorkItem> stack, int fac);

/// Imposes the clauses one by one on the full row, depth first. With
/// workers > 1 the head splits its stack once it holds `workers` items and
/// merges the satellites' rows in worker order.
EsopFamily enumerate(const ConstraintSystem& sys, const EngineOptions& opts = {});

/// Sum of row_count, or of count_bounded when k is given.
BigCount count_models(const EsopFamily& fam, std::optional<int> k = std::nullopt);

/// Final rows from a traversal that reshuffles the stack after every step.
/// Requires opts.seed. Returns fewer rows only when fewer exist.
std::vector<Row012> sample_final_rows(const ConstraintSystem& sys, std::size_t count, const EngineOptions& opts);

/// "# n=<n> rows=<R> models=<N>" then one row per line.
void write_rows(std::ostream& out, const EsopFamily& fam);

/// {"schema":1,"family":...,"n":...,"m":...,"k":...,"rows":...,"models":...,"seconds":...}
std::string stats_json(const EsopFamily& fam, int edge_count, int workers = 1);

}  // namespace metset
