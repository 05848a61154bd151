// Command-line front end: exact broadcast-independence solvers for trees,
// brute-force references for small graphs, and the star-gadget reduction.
//
// Exit codes: 0 success, 1 bad input or solver failure, 2 validation verdict
// "invalid".  All value output precedes timing output; timings are the only
// nondeterministic lines.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alphab/broadcast.hpp"
#include "alphab/envelope.hpp"
#include "alphab/errors.hpp"
#include "alphab/gadget.hpp"
#include "alphab/generators.hpp"
#include "alphab/graph.hpp"
#include "alphab/io.hpp"
#include "alphab/oracle.hpp"
#include "alphab/rooted_tree.hpp"
#include "alphab/tree_dp.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void print_command_echo(int argc, char** argv) {
    std::string line = "command";
    for (int i = 1; i < argc; ++i) {
        line += ' ';
        line += argv[i];
    }
    std::printf("%s\n", line.c_str());
}

void print_input_digest(const std::string& bytes) {
    std::printf("input fnv1a:%016" PRIx64 "\n", alphab::fnv1a64(bytes));
}

alphab::DpMode parse_mode(const std::string& mode) {
    if (mode == "naive") return alphab::DpMode::kNaive;
    if (mode == "pruned") return alphab::DpMode::kPruned;
    throw alphab::input_error("unknown mode \"" + mode + "\" (expected naive or pruned)");
}

struct SolveTreeArgs {
    std::string graph_file;
    std::string witness_file;
    std::string mode = "naive";
    int threads = 1;
};

int cmd_solve_tree(const SolveTreeArgs& a, int argc, char** argv) {
    const auto t0 = Clock::now();
    print_command_echo(argc, argv);
    const std::string bytes = alphab::read_text_file(a.graph_file);
    print_input_digest(bytes);
    const alphab::Graph g = alphab::graph_from_text(bytes);
    const alphab::RootedTree rt = alphab::root_tree(g, 0);

    const auto t_solve = Clock::now();
    alphab::DpOptions opts;
    opts.mode = parse_mode(a.mode);
    opts.threads = a.threads;
    opts.retain_tables = !a.witness_file.empty();
    alphab::BetaTable table(rt, opts);
    const double solve_ms = ms_since(t_solve);

    std::printf("alpha_b %d\n", table.alpha_b());
    if (!a.witness_file.empty()) {
        alphab::write_text_file(a.witness_file, alphab::broadcast_to_text(table.witness()));
        std::printf("witness %s\n", a.witness_file.c_str());
    }
    std::printf("time_ms solve %.3f\n", solve_ms);
    std::printf("time_ms total %.3f\n", ms_since(t0));
    return 0;
}

struct SolveExactArgs {
    std::string graph_file;
    bool alpha = false;
    bool alpha_b = false;
    int limit = 10;
};

int cmd_solve_exact(const SolveExactArgs& a, int argc, char** argv) {
    if (a.alpha == a.alpha_b)
        throw alphab::input_error("solve-exact: pass exactly one of --alpha, --alpha-b");
    const auto t0 = Clock::now();
    print_command_echo(argc, argv);
    const std::string bytes = alphab::read_text_file(a.graph_file);
    print_input_digest(bytes);
    const alphab::Graph g = alphab::graph_from_text(bytes);

    const auto t_solve = Clock::now();
    if (a.alpha) {
        const auto r = alphab::max_independent_set(g);
        const double solve_ms = ms_since(t_solve);
        std::printf("alpha %d\n", r.size);
        std::printf("time_ms solve %.3f\n", solve_ms);
    } else {
        const auto r = alphab::brute_alpha_b(g, a.limit);
        const double solve_ms = ms_since(t_solve);
        std::printf("alpha_b %d\n", r.value);
        std::printf("time_ms solve %.3f\n", solve_ms);
    }
    std::printf("time_ms total %.3f\n", ms_since(t0));
    return 0;
}

struct ValidateArgs {
    std::string graph_file;
    std::string broadcast_file;
};

int cmd_validate(const ValidateArgs& a, int argc, char** argv) {
    const auto t0 = Clock::now();
    print_command_echo(argc, argv);
    const std::string graph_bytes = alphab::read_text_file(a.graph_file);
    const std::string bc_bytes = alphab::read_text_file(a.broadcast_file);
    print_input_digest(graph_bytes);
    print_input_digest(bc_bytes);

    const alphab::Graph g = alphab::graph_from_text(graph_bytes);
    const alphab::Broadcast f = alphab::broadcast_from_text(bc_bytes, g.n);
    if (!alphab::is_connected(g)) throw alphab::input_error("validate: graph must be connected");
    const alphab::DistanceTable dt = alphab::all_pairs_distances(g);
    const auto violations = alphab::validate_broadcast(g, f, dt);
    if (violations.empty()) {
        std::printf("valid weight %d\n", f.weight());
        std::printf("time_ms total %.3f\n", ms_since(t0));
        return 0;
    }
    std::printf("invalid %s\n", violations.front().describe(g, f, dt).c_str());
    std::printf("time_ms total %.3f\n", ms_since(t0));
    return 2;
}

struct ReduceArgs {
    std::string graph_file;
    std::string out_file;
    std::string map_file;
    int limit = 12;
};

int cmd_reduce(const ReduceArgs& a, int argc, char** argv) {
    const auto t0 = Clock::now();
    print_command_echo(argc, argv);
    const std::string bytes = alphab::read_text_file(a.graph_file);
    print_input_digest(bytes);
    const alphab::Graph h = alphab::graph_from_text(bytes);

    const alphab::GadgetGraph gg = alphab::build_gadget(h);
    int max_degree = 0;
    int endvertices = 0;
    for (int v = 0; v < gg.graph.n; ++v) {
        max_degree = std::max(max_degree, gg.graph.degree(v));
        if (gg.graph.degree(v) == 1) ++endvertices;
    }
    std::printf("order %d\n", gg.graph.n);
    std::printf("endvertices %d\n", endvertices);
    std::printf("max_degree %d\n", max_degree);
    std::printf("connected %s\n", alphab::is_connected(gg.graph) ? "true" : "false");
    if (h.n <= a.limit) {
        const int alpha_h = alphab::max_independent_set(h).size;
        std::printf("alpha_h %d\n", alpha_h);
        std::printf("target %d\n", alphab::target_value(h, alpha_h));
    } else {
        std::printf("target unknown (order above limit %d)\n", a.limit);
    }

    alphab::write_text_file(a.out_file, alphab::graph_to_text(gg.graph));
    std::printf("gadget %s\n", a.out_file.c_str());
    if (!a.map_file.empty()) {
        alphab::write_text_file(a.map_file, alphab::role_map_to_text(gg));
        std::printf("map %s\n", a.map_file.c_str());
    }
    std::printf("time_ms total %.3f\n", ms_since(t0));
    return 0;
}

struct GenArgs {
    std::string kind;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    std::string out_file;
};

int cmd_gen(const GenArgs& a, int argc, char** argv) {
    const auto t0 = Clock::now();
    print_command_echo(argc, argv);
    const alphab::Graph g = alphab::generate(a.kind, a.params, a.seed);
    std::printf("seed %llu\n", static_cast<unsigned long long>(a.seed));
    std::printf("n %d\n", g.n);
    std::printf("m %d\n", g.edge_count());
    alphab::write_text_file(a.out_file, alphab::graph_to_text(g));
    std::printf("out %s\n", a.out_file.c_str());
    std::printf("time_ms total %.3f\n", ms_since(t0));
    return 0;
}

struct BenchArgs {
    std::string sizes = "4..9";
    std::uint64_t seed = 0;
    std::string mode = "naive";
    int repeats = 1;
    int threads = 1;
};

std::vector<int> parse_sizes(const std::string& spec) {
    std::vector<int> out;
    auto parse_one = [](const std::string& s) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(s, &pos);
            if (pos != s.size() || v < 1) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw alphab::input_error("bench: bad size \"" + s + "\"");
        }
    };
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
        const int lo = parse_one(spec.substr(0, dots));
        const int hi = parse_one(spec.substr(dots + 2));
        if (lo > hi) throw alphab::input_error("bench: empty size range \"" + spec + "\"");
        for (int n = lo; n <= hi; ++n) out.push_back(n);
        return out;
    }
    std::size_t start = 0;
    while (start <= spec.size()) {
        const auto comma = spec.find(',', start);
        const auto end = comma == std::string::npos ? spec.size() : comma;
        out.push_back(parse_one(spec.substr(start, end - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// Table goes to stdout (header exactly "n mode value ms", tab-separated, one
// row per repeat); the run report goes to stderr so the table stays clean.
int cmd_bench(const BenchArgs& a, int argc, char** argv) {
    if (a.repeats < 1) throw alphab::input_error("bench: repeats must be >= 1");
    const alphab::DpMode mode = parse_mode(a.mode);
    const std::vector<int> sizes = parse_sizes(a.sizes);

    std::string echo = "command";
    for (int i = 1; i < argc; ++i) {
        echo += ' ';
        echo += argv[i];
    }
    std::fprintf(stderr, "%s\n", echo.c_str());
    std::fprintf(stderr, "seed %llu\n", static_cast<unsigned long long>(a.seed));

    alphab::SplitMix64 stream(a.seed);
    std::printf("n\tmode\tvalue\tms\n");
    for (int n : sizes) {
        const std::uint64_t tree_seed = stream.next();
        const alphab::Graph g = alphab::random_tree(n, tree_seed);
        const alphab::RootedTree rt = alphab::root_tree(g, 0);
        int expected = -1;
        if (n <= 9) expected = alphab::brute_alpha_b(g).value;
        for (int r = 0; r < a.repeats; ++r) {
            const auto t0 = Clock::now();
            const int value = mode == alphab::DpMode::kNaive
                                  ? alphab::solve_alpha_b(rt, a.threads).value
                                  : alphab::solve_alpha_b_pruned(rt, a.threads);
            const double ms = ms_since(t0);
            if (expected >= 0 && value != expected) {
                std::fprintf(stderr,
                             "bench: solver disagrees with the brute-force reference on "
                             "n=%d (got %d, expected %d)\n",
                             n, value, expected);
                return 1;
            }
            std::printf("%d\t%s\t%d\t%.3f\n", n, a.mode.c_str(), value, ms);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers for the broadcast independence number"};
    app.require_subcommand(1);

    SolveTreeArgs solve_tree;
    auto* st = app.add_subcommand("solve-tree", "tree solver (polynomial dynamic program)");
    st->add_option("graph", solve_tree.graph_file, "tree in graph text format")->required();
    st->add_option("--witness", solve_tree.witness_file, "write an optimal broadcast here");
    st->add_option("--mode", solve_tree.mode, "naive or pruned")->capture_default_str();
    st->add_option("--threads", solve_tree.threads, "worker threads")->capture_default_str();

    SolveExactArgs solve_exact;
    auto* se = app.add_subcommand("solve-exact", "brute-force reference for small graphs");
    se->add_option("graph", solve_exact.graph_file, "graph in text format")->required();
    se->add_flag("--alpha", solve_exact.alpha, "independence number");
    se->add_flag("--alpha-b", solve_exact.alpha_b, "broadcast independence number");
    se->add_option("--limit", solve_exact.limit, "vertex-count refusal limit for --alpha-b")
        ->capture_default_str();

    ValidateArgs validate;
    auto* va = app.add_subcommand("validate", "check an independent broadcast");
    va->add_option("graph", validate.graph_file)->required();
    va->add_option("broadcast", validate.broadcast_file)->required();

    ReduceArgs reduce;
    auto* re = app.add_subcommand("reduce", "build the star gadget of a cubic graph");
    re->add_option("graph", reduce.graph_file, "connected 3-regular graph")->required();
    re->add_option("--out", reduce.out_file, "gadget graph output")->required();
    re->add_option("--map", reduce.map_file, "role map output");
    re->add_option("--limit", reduce.limit, "largest order for which alpha(H) is solved")
        ->capture_default_str();

    GenArgs gen;
    auto* ge = app.add_subcommand("gen", "graph generators");
    ge->add_option("kind", gen.kind, "path|star|spider|random_tree|random_connected|cubic")
        ->required();
    ge->add_option("params", gen.params, "generator parameters");
    ge->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
    ge->add_option("--out", gen.out_file, "output file")->required();

    BenchArgs bench;
    auto* be = app.add_subcommand("bench", "time the tree solver on seeded random trees");
    be->add_option("--sizes", bench.sizes, "range a..b or comma list")->capture_default_str();
    be->add_option("--seed", bench.seed, "PRNG seed")->capture_default_str();
    be->add_option("--mode", bench.mode, "naive or pruned")->capture_default_str();
    be->add_option("--repeats", bench.repeats, "timing samples per size")->capture_default_str();
    be->add_option("--threads", bench.threads, "worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (st->parsed()) return cmd_solve_tree(solve_tree, argc, argv);
        if (se->parsed()) return cmd_solve_exact(solve_exact, argc, argv);
        if (va->parsed()) return cmd_validate(validate, argc, argv);
        if (re->parsed()) return cmd_reduce(reduce, argc, argv);
        if (ge->parsed()) return cmd_gen(gen, argc, argv);
        if (be->parsed()) return cmd_bench(bench, argc, argv);
    } catch (const alphab::input_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const alphab::solver_timeout& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::logic_error& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
