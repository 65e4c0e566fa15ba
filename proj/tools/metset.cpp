// metset: enumerate metric, geodesically convex and connected vertex sets.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "metset/accmetric.hpp"
#include "metset/constraints.hpp"
#include "metset/engine.hpp"
#include "metset/graph.hpp"
#include "metset/paths.hpp"

namespace {

using namespace metset;

constexpr long long kExpandLimit = 1'000'000;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ClauseOrder parse_order(const std::string& name) {
    if (name == "dist") return ClauseOrder::by_distance;
    if (name == "lex") return ClauseOrder::lexicographic;
    throw std::invalid_argument("unknown clause order '" + name + "' (expected dist or lex)");
}

struct Common {
    std::string input;
    std::string family;
    std::optional<int> max_card;
    std::optional<std::uint64_t> seed;
    int workers = 1;
    std::string clause_order = "dist";
};

void add_family_flags(CLI::App* cmd, Common& c, bool with_workers) {
    cmd->add_option("input", c.input, "Graph file, or - for standard input")->required();
    cmd->add_option("--family", c.family, "metric | geconv | connected")->required();
    cmd->add_option("--max-card", c.max_card, "Only sets with at most K vertices");
    cmd->add_option("--clause-order", c.clause_order, "dist (default) or lex");
    if (with_workers) cmd->add_option("--workers", c.workers, "Parallel satellites")->check(CLI::PositiveNumber);
}

struct Prepared {
    Graph graph;
    ConstraintSystem system;
    double setup_seconds;
};

Prepared prepare(const Common& c) {
    const auto start = std::chrono::steady_clock::now();
    Graph g = parse_graph(read_input(c.input));
    ConstraintSystem sys = build_system(g, parse_family(c.family), parse_order(c.clause_order));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {std::move(g), std::move(sys), secs};
}

EngineOptions engine_options(const Common& c) {
    EngineOptions opts;
    opts.max_card = c.max_card;
    opts.seed = c.seed;
    opts.workers = c.workers;
    return opts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate metric, geodesically convex and connected vertex sets as disjoint 012-rows"};
    app.require_subcommand(1);

    // gen
    std::string gen_kind;
    long long gen_a = 0, gen_b = 0;
    std::uint64_t gen_seed = 1;
    bool gen_connected = false;
    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "Write a random graph (gen graph N M) or tree (gen tree N LEAVES)");
    gen->add_option("kind", gen_kind, "graph | tree")->required()->check(CLI::IsMember({"graph", "tree"}));
    gen->add_option("a", gen_a, "vertex count")->required();
    gen->add_option("b", gen_b, "edge count (graph) or leaf count (tree)")->required();
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_flag("--connected", gen_connected, "Resample until connected (graph only)");
    gen->add_option("-o,--output", gen_output, "Output file (default: standard output)");

    // geodesics
    std::string geo_input;
    bool geo_edges = false, geo_chordless = false;
    auto* geo = app.add_subcommand("geodesics", "List all geodesics (or chordless paths)");
    geo->add_option("input", geo_input, "Graph file, or -")->required();
    geo->add_flag("--include-edges", geo_edges, "Also list geodesics of length 1");
    geo->add_flag("--chordless", geo_chordless, "List chordless paths instead");

    // enum
    Common en;
    bool en_json = false, en_expand = false, en_dump = false, en_shuffle = false;
    auto* enum_cmd = app.add_subcommand("enum", "Enumerate a family as disjoint 012-rows");
    add_family_flags(enum_cmd, en, true);
    enum_cmd->add_option("--seed", en.seed, "Seed for --shuffle");
    enum_cmd->add_flag("--shuffle", en_shuffle, "Randomize the stack order (needs --seed)");
    enum_cmd->add_flag("--json", en_json, "Print statistics as JSON instead of rows");
    enum_cmd->add_flag("--expand", en_expand, "Print the member sets instead of rows");
    enum_cmd->add_flag("--dump-clauses", en_dump, "Print the superclauses and stop");

    // count
    Common co;
    auto* count_cmd = app.add_subcommand("count", "Print the number of sets in a family");
    add_family_flags(count_cmd, co, true);

    // sample
    Common sa;
    std::size_t sa_count = 1;
    auto* sample_cmd = app.add_subcommand("sample", "Print final rows from a randomized traversal");
    add_family_flags(sample_cmd, sa, false);
    sample_cmd->add_option("--count", sa_count, "Number of rows")->required();
    sample_cmd->add_option("--seed", sa.seed, "Random seed")->required();

    // accmetric
    std::string acc_input;
    std::optional<int> acc_max;
    bool acc_json = false;
    auto* acc = app.add_subcommand("accmetric", "List the accessible metric sets level by level");
    acc->add_option("input", acc_input, "Graph file, or -")->required();
    acc->add_option("--max-card", acc_max, "Stop after this level");
    acc->add_flag("--json", acc_json, "JSON output with per-level counts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Graph g = gen_kind == "graph" ? random_graph(static_cast<int>(gen_a), gen_b, gen_seed, gen_connected)
                                          : random_tree(static_cast<int>(gen_a), static_cast<int>(gen_b), gen_seed);
            const std::string text = write_graph(g);
            if (gen_output.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(gen_output, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write '" + gen_output + "'");
                out << text;
            }
            const long long n = g.order();
            std::cerr << "superclauses " << n * (n - 1) / 2 - g.size() << '\n';
        } else if (*geo) {
            Graph g = parse_graph(read_input(geo_input));
            auto paths = geo_chordless ? all_chordless_paths(g) : all_geodesics(g, all_pairs_distances(g), geo_edges);
            write_paths(std::cout, paths);
        } else if (*enum_cmd) {
            const auto p = prepare(en);
            if (en_dump) {
                for (const auto& c : p.system.clauses) std::cout << format_clause(c) << '\n';
                return 0;
            }
            auto opts = engine_options(en);
            if (en_shuffle) opts.row_order = RowOrder::shuffled;
            auto fam = enumerate(p.system, opts);
            fam.stats.setup_seconds = p.setup_seconds;
            if (en_json) {
                std::cout << stats_json(fam, p.graph.size(), en.workers) << '\n';
            } else if (en_expand) {
                if (count_models(fam, fam.max_card) > kExpandLimit)
                    throw std::length_error("refusing to expand more than 1000000 sets");
                for (const auto& r : fam.rows)
                    for (const auto& x : expand_row(r, fam.max_card)) std::cout << x.to_string() << '\n';
            } else {
                write_rows(std::cout, fam);
            }
        } else if (*count_cmd) {
            const auto p = prepare(co);
            const auto fam = enumerate(p.system, engine_options(co));
            std::cout << count_models(fam, fam.max_card) << '\n';
        } else if (*sample_cmd) {
            const auto p = prepare(sa);
            const auto rows = sample_final_rows(p.system, sa_count, engine_options(sa));
            for (const auto& r : rows) std::cout << r.to_string() << '\n';
        } else if (*acc) {
            Graph g = parse_graph(read_input(acc_input));
            const auto levels = acc_metric_enumerate(g, acc_max);
            if (acc_json) {
                nlohmann::json doc{{"schema", 1}, {"n", g.order()}, {"m", g.size()}};
                auto& arr = doc["levels"] = nlohmann::json::array();
                std::size_t total = 0;
                for (const auto& level : levels) {
                    nlohmann::json sets = nlohmann::json::array();
                    for (const auto& x : level.sets) sets.push_back(x.to_vector());
                    arr.push_back({{"k", level.k}, {"count", level.sets.size()}, {"sets", std::move(sets)}});
                    total += level.sets.size();
                }
                doc["total"] = total;
                std::cout << doc.dump() << '\n';
            } else {
                for (const auto& level : levels) {
                    std::cout << "# level k=" << level.k << " count=" << level.sets.size() << '\n';
                    for (const auto& x : level.sets) std::cout << x.to_string() << '\n';
                }
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "metset: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
