#include "metset/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "metset/kernels.hpp"

namespace metset {

std::vector<Row012> impose(const Superclause& sc, const Row012& r) {
    if (clause_status(sc, r) == ClauseStatus::satisfied) return {r};

    std::vector<Row012> sons;
    const bool s_free = !r.ones.contains(sc.s);
    const bool t_free = !r.ones.contains(sc.t);
    if (s_free) {
        Row012 a = r;
        a.zeros.insert(sc.s);
        sons.push_back(a);
    }
    if (t_free) {
        Row012 b = r;
        b.ones.insert(sc.s);
        b.zeros.insert(sc.t);
        sons.push_back(b);
    }

    Row012 both = r;
    both.ones.insert(sc.s);
    both.ones.insert(sc.t);
    std::vector<std::uint32_t> alive(sc.terms.size());
    const std::size_t count = kernels::collect_disjoint(sc.terms, both.zeros, alive);
    std::vector<VertexSet> shrunk;
    shrunk.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        VertexSet rest = sc.terms[alive[i]] - both.ones;
        if (rest.empty()) {
            sons.push_back(both);
            return sons;
        }
        shrunk.push_back(rest);
    }
    if (!shrunk.empty()) {
        auto tail = orthogonalize_terms(both, shrunk);
        sons.insert(sons.end(), tail.begin(), tail.end());
    }
    return sons;
}

std::vector<Row012> k_prune(std::vector<Row012> sons, int k) {
    if (k < 0) throw std::invalid_argument("cardinality bound must be non-negative");
    std::erase_if(sons, [k](const Row012& r) { return r.ones_count() > k; });
    return sons;
}

std::vector<std::vector<WorkItem>> split_work(std::vector<WorkItem> stack, int fac) {
    if (fac < 1) throw std::invalid_argument("worker count must be at least 1");
    std::vector<std::vector<WorkItem>> out(static_cast<std::size_t>(fac));
    for (std::size_t i = 0; i < stack.size(); ++i) out[i % static_cast<std::size_t>(fac)].push_back(std::move(stack[i]));
    return out;
}

namespace {

// One LIFO stack and its output.
class Lifo {
public:
    Lifo(const ConstraintSystem& sys, std::optional<int> max_card, std::optional<std::uint64_t> seed)
        : sys_(sys), max_card_(max_card) {
        if (seed) rng_.emplace(*seed);
    }

    // Skips clauses the row already satisfies; true when none are left.
    bool advance(Row012& r) const {
        const auto total = static_cast<std::uint32_t>(sys_.clauses.size());
        while (r.pending < total && clause_status(sys_.clauses[r.pending], r) == ClauseStatus::satisfied) ++r.pending;
        return r.pending == total;
    }

    // Pops the top row and replaces it by its sons. Final sons go to `finals`
    // unless `keep_finals_on_stack`.
    void step(bool keep_finals_on_stack = false) {
        Row012 top = std::move(stack.back());
        stack.pop_back();
        if (top.pending == sys_.clauses.size()) {
            finals.push_back(std::move(top));
            return;
        }
        ++processed;
        auto sons = impose(sys_.clauses[top.pending], top);
        if (max_card_) sons = k_prune(std::move(sons), *max_card_);
        for (auto& son : sons) {
            son.pending = top.pending + 1;
            if (advance(son) && !keep_finals_on_stack) finals.push_back(std::move(son));
            else stack.push_back(std::move(son));
        }
        peak_stack = std::max(peak_stack, stack.size());
        if (rng_) std::shuffle(stack.begin(), stack.end(), *rng_);
    }

    void run() {
        while (!stack.empty()) step();
    }

    std::vector<Row012> stack;
    std::vector<Row012> finals;
    std::size_t peak_stack = 0;
    std::size_t processed = 0;

private:
    const ConstraintSystem& sys_;
    std::optional<int> max_card_;
    std::optional<std::mt19937_64> rng_;
};

void check_options(const ConstraintSystem& sys, const EngineOptions& opts) {
    if (opts.workers < 1) throw std::invalid_argument("worker count must be at least 1");
    if (opts.max_card && (*opts.max_card < 0 || *opts.max_card > sys.n))
        throw std::invalid_argument("cardinality bound must lie in 0.." + std::to_string(sys.n));
    if (opts.row_order == RowOrder::shuffled && !opts.seed)
        throw std::invalid_argument("shuffled row order needs a seed");
}

}  // namespace

EsopFamily enumerate(const ConstraintSystem& sys, const EngineOptions& opts) {
    check_options(sys, opts);
    const auto start = std::chrono::steady_clock::now();
    const auto seed = opts.row_order == RowOrder::shuffled ? opts.seed : std::nullopt;

    Lifo head(sys, opts.max_card, seed);
    Row012 root = Row012::full(sys.n);
    if (head.advance(root)) head.finals.push_back(root);
    else head.stack.push_back(root);

    EsopFamily fam;
    fam.n = sys.n;
    fam.family = sys.family;
    fam.max_card = opts.max_card;

    if (opts.workers == 1) {
        head.run();
        fam.rows = std::move(head.finals);
        fam.stats.peak_stack = head.peak_stack;
        fam.stats.processed = head.processed;
    } else {
        while (!head.stack.empty() && head.stack.size() < static_cast<std::size_t>(opts.workers)) head.step();
        auto parts = split_work(std::move(head.stack), opts.workers);
        std::vector<Lifo> satellites;
        satellites.reserve(parts.size());
        for (std::size_t w = 0; w < parts.size(); ++w) {
            satellites.emplace_back(sys, opts.max_card, seed ? std::optional(*seed + 1 + w) : std::nullopt);
            satellites.back().stack = std::move(parts[w]);
        }
        {
            std::vector<std::jthread> threads;
            threads.reserve(satellites.size());
            for (auto& sat : satellites) threads.emplace_back([&sat] { sat.run(); });
        }
        fam.rows = std::move(head.finals);
        fam.stats.peak_stack = head.peak_stack;
        fam.stats.processed = head.processed;
        for (auto& sat : satellites) {
            fam.rows.insert(fam.rows.end(), std::make_move_iterator(sat.finals.begin()),
                            std::make_move_iterator(sat.finals.end()));
            fam.stats.peak_stack = std::max(fam.stats.peak_stack, sat.peak_stack);
            fam.stats.processed += sat.processed;
        }
    }

    for (auto& r : fam.rows) r.pending = 0;
    fam.stats.rows = fam.rows.size();
    fam.stats.models = count_models(fam);
    if (opts.max_card) fam.stats.bounded_models = count_models(fam, opts.max_card);
    fam.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return fam;
}

BigCount count_models(const EsopFamily& fam, std::optional<int> k) {
    BigCount total = 0;
    for (const auto& r : fam.rows) total += k ? count_bounded(r, *k) : row_count(r);
    return total;
}

std::vector<Row012> sample_final_rows(const ConstraintSystem& sys, std::size_t count, const EngineOptions& opts) {
    if (!opts.seed) throw std::invalid_argument("sampling needs a seed");
    EngineOptions checked = opts;
    checked.row_order = RowOrder::shuffled;
    check_options(sys, checked);
    if (count == 0) return {};

    Lifo lifo(sys, opts.max_card, opts.seed);
    Row012 root = Row012::full(sys.n);
    lifo.advance(root);
    lifo.stack.push_back(root);
    while (!lifo.stack.empty() && lifo.finals.size() < count) lifo.step(/*keep_finals_on_stack=*/true);
    for (auto& r : lifo.finals) r.pending = 0;
    return std::move(lifo.finals);
}

void write_rows(std::ostream& out, const EsopFamily& fam) {
    out << "# n=" << fam.n << " rows=" << fam.rows.size() << " models=" << count_models(fam, fam.max_card) << '\n';
    for (const auto& r : fam.rows) out << r.to_string() << '\n';
}

std::string stats_json(const EsopFamily& fam, int edge_count, int workers) {
    char seconds[32];
    char setup[32];
    std::snprintf(seconds, sizeof seconds, "%.6f", fam.stats.seconds);
    std::snprintf(setup, sizeof setup, "%.6f", fam.stats.setup_seconds);
    std::ostringstream out;
    // models may exceed 64 bits, so the object is written by hand.
    out << "{\"schema\":1,\"family\":\"" << to_string(fam.family) << "\",\"n\":" << fam.n << ",\"m\":" << edge_count
        << ",\"k\":";
    if (fam.max_card) out << *fam.max_card;
    else out << "null";
    out << ",\"rows\":" << fam.rows.size() << ",\"models\":" << count_models(fam, fam.max_card)
        << ",\"models_unbounded\":" << fam.stats.models << ",\"seconds\":" << seconds << ",\"setup_seconds\":" << setup
        << ",\"peak_stack\":" << fam.stats.peak_stack << ",\"workers\":" << workers << "}";
    return out.str();
}

}  // namespace metset
