// Command-line front end: solve, decide, reduce, gen, scaffold, bench.
//
// Exit codes: 0 success or threshold met, 1 threshold unmet, 2 usage or
// parse error, 3 internal limit exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrs/lrs.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_unmet = 1;
constexpr int exit_usage = 2;
constexpr int exit_limit = 3;

lrs::Instance load_instance(const std::string& path) {
    if (path == "-") return lrs::parse_instance(std::cin);
    std::ifstream in(path);
    if (!in) throw lrs::Error(lrs::ErrorKind::IoError, "cannot open " + path);
    return lrs::parse_instance(in);
}

lrs::CubicGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lrs::Error(lrs::ErrorKind::IoError, "cannot open " + path);
    return lrs::parse_graph(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw lrs::Error(lrs::ErrorKind::IoError, "cannot write " + path);
}

std::uint64_t effective_seed(std::uint64_t seed) {
    if (const char* env = std::getenv("LRS_SEED"); env && *env) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw lrs::Error(lrs::ErrorKind::ParameterError, "LRS_SEED is not an unsigned integer");
        }
    }
    return seed;
}

int print_solution(const lrs::Instance& inst, const lrs::Solution& sol, std::optional<std::size_t> k) {
    const auto checked = lrs::validate_solution(inst, sol.indices());
    std::cout << lrs::format_solution(inst, checked);
    return (!k || checked.length() >= *k) ? exit_ok : exit_unmet;
}

struct SolveArgs {
    std::string algo = "dp";
    std::string input;
    std::optional<std::size_t> k;
};

int run_solve(const SolveArgs& a) {
    const auto inst = load_instance(a.input);
    if (a.algo == "brute") return print_solution(inst, lrs::solve_bruteforce(inst), a.k);
    if (a.algo == "dp") return print_solution(inst, lrs::solve_subset_dp(inst).solution, a.k);
    return print_solution(inst, lrs::approx_solve(inst), a.k);
}

struct DecideArgs {
    std::size_t r = 1;
    std::optional<std::size_t> k;
    std::size_t trials = lrs::default_trials;
    std::uint64_t seed = 0;
    std::string input;
};

int run_decide(const DecideArgs& a) {
    const auto inst = load_instance(a.input);
    const auto seed = effective_seed(a.seed);
    if (a.k) {
        const auto rep = lrs::mld_decide(inst, a.r, *a.k, a.trials, seed);
        const auto& v = rep.verdicts.front();
        std::cout << "r " << a.r << "\nk " << v.k << "\nverdict " << (v.yes ? "yes" : "no") << '\n';
        if (v.witness_seed) std::cout << "witness_seed " << *v.witness_seed << '\n';
        std::cout << "master_seed " << rep.master_seed << "\ntrials " << rep.trials << "\ntrials_run "
                  << rep.trials_run << '\n';
        return v.yes ? exit_ok : exit_unmet;
    }
    try {
        const auto res = lrs::mld_solve_for_runs(inst, a.r, a.trials, seed);
        std::optional<std::uint64_t> witness;
        for (const auto& v : res.report.verdicts) {
            if (v.k == res.max_k) witness = v.witness_seed;
        }
        std::cout << "r " << a.r << "\nmax_k " << res.max_k << '\n';
        if (witness) std::cout << "witness_seed " << *witness << '\n';
        std::cout << "master_seed " << seed << "\ntrials " << a.trials << '\n';
        return exit_ok;
    } catch (const lrs::Error& e) {
        if (e.kind() != lrs::ErrorKind::NoSolutionFound) throw;
        std::cout << "r " << a.r << "\nmax_k none\nmaster_seed " << seed << "\ntrials " << a.trials << '\n';
        return exit_unmet;
    }
}

struct ReduceArgs {
    std::string graph;
    std::vector<std::string> inputs;
    std::size_t k = 1;
    std::string out;
};

int run_reduce_misc(const ReduceArgs& a) {
    const auto map = lrs::misc_encode(load_graph(a.graph));
    const auto& g = map.graph;
    if (!a.out.empty()) {
        write_text(a.out, map.instance.to_text() + '\n');
        std::ostringstream roles;
        lrs::write_roles(roles, map);
        write_text(a.out + ".roles", roles.str());
    }
    std::cout << "n " << g.n() << "\nm " << g.m() << "\nlength " << map.instance.size() << "\nalphabet "
              << map.instance.alphabet_size() << '\n';
    for (std::size_t q = 0; q <= g.n() / 2; ++q) {
        std::cout << "threshold " << q << ' ' << map.threshold(q) << '\n';
    }
    return exit_ok;
}

int run_reduce_compose(const ReduceArgs& a) {
    std::vector<lrs::Instance> inputs;
    for (const auto& path : a.inputs) inputs.push_back(load_instance(path));
    const auto res = lrs::cross_compose(inputs, a.k);
    if (!a.out.empty()) {
        write_text(a.out, res.instance.to_text() + '\n');
        std::string spans;
        for (std::size_t i = 0; i < res.spans.size(); ++i) {
            spans += "input " + std::to_string(i + 1) + ' ' + std::to_string(res.spans[i].first) + ' ' +
                     std::to_string(res.spans[i].second) + '\n';
        }
        write_text(a.out + ".spans", spans);
    }
    std::cout << "t " << res.t << "\nn " << res.n << "\nm " << res.m << "\nlength " << res.instance.size()
              << "\nalphabet " << res.instance.alphabet_size() << "\nk_prime " << res.k_prime << '\n';
    return exit_ok;
}

struct GenArgs {
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::optional<std::size_t> cap;
    std::string dist = "multiset";
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen_string(const GenArgs& a) {
    lrs::GenSpec spec{a.n, a.sigma, a.cap,
                      a.dist == "uniform" ? lrs::Distribution::Uniform : lrs::Distribution::ShuffledMultiset,
                      effective_seed(a.seed)};
    const auto inst = lrs::gen_string(spec);
    std::string header = "// gen string n=" + std::to_string(a.n) + " sigma=" + std::to_string(a.sigma) +
                         (a.cap ? " occ_cap=" + std::to_string(*a.cap) : std::string()) + " dist=" + a.dist +
                         " seed=" + std::to_string(spec.seed) + '\n';
    write_text(a.out, header + inst.to_text() + '\n');
    return exit_ok;
}

int run_gen_cubic(const GenArgs& a) {
    write_text(a.out, lrs::format_graph(lrs::gen_random_cubic(a.n, effective_seed(a.seed))));
    return exit_ok;
}

struct BenchArgs {
    std::string suite;
    std::string out;
    std::uint64_t seed = 0;
    bool parallel = false;
    std::size_t reps = 5;
    std::size_t trials = 10;
};

int run_bench(const BenchArgs& a) {
    const auto suite = a.suite == "scaling-r"   ? lrs::BenchSuite::ScalingR
                       : a.suite == "scaling-n" ? lrs::BenchSuite::ScalingN
                                                : lrs::BenchSuite::DpVsMld;
    std::ofstream out(a.out);
    if (!out) throw lrs::Error(lrs::ErrorKind::IoError, "cannot write " + a.out);
    const auto rows = lrs::run_bench(suite, effective_seed(a.seed), {a.reps, a.trials, a.parallel}, out);
    std::cout << "rows " << rows << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longest run subsequence solvers and instance generators"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Solve an instance file and print the solution");
    solve->add_option("--algo", solve_args.algo, "brute | dp | approx")
        ->check(CLI::IsMember({"brute", "dp", "approx"}));
    solve->add_option("--input", solve_args.input, "Instance file ('-' for stdin)")->required();
    solve->add_option("--k", solve_args.k, "Exit 1 if the solution is shorter than K");

    DecideArgs decide_args;
    auto* decide = app.add_subcommand("decide", "Randomized decision for exactly r runs");
    decide->add_option("--r", decide_args.r, "Number of runs")->required();
    decide->add_option("--k", decide_args.k, "Exact length; omit to search the largest k");
    decide->add_option("--trials", decide_args.trials, "Independent trials")->capture_default_str();
    decide->add_option("--seed", decide_args.seed, "Master seed (LRS_SEED overrides)")->capture_default_str();
    decide->add_option("--input", decide_args.input, "Instance file")->required();

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand("reduce", "Build reduction instances");
    reduce->require_subcommand(1);
    auto* misc = reduce->add_subcommand("misc", "Encode a cubic graph");
    misc->add_option("--graph", reduce_args.graph, "Graph file")->required();
    misc->add_option("--out", reduce_args.out, "Instance output; roles go to <out>.roles");
    auto* compose = reduce->add_subcommand("compose", "OR-compose instances of equal shape");
    compose->add_option("--inputs", reduce_args.inputs, "Instance files")->required()->expected(1, -1);
    compose->add_option("--k", reduce_args.k, "Common target length")->required();
    compose->add_option("--out", reduce_args.out, "Instance output; spans go to <out>.spans");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate random inputs");
    gen->require_subcommand(1);
    auto* gen_string = gen->add_subcommand("string", "Random symbol string");
    gen_string->add_option("--n", gen_args.n, "Length")->required();
    gen_string->add_option("--sigma", gen_args.sigma, "Alphabet size")->required();
    gen_string->add_option("--occ-cap", gen_args.cap, "Maximum occurrences per symbol");
    gen_string->add_option("--dist", gen_args.dist, "multiset | uniform")
        ->check(CLI::IsMember({"multiset", "uniform"}));
    gen_string->add_option("--seed", gen_args.seed, "Seed (LRS_SEED overrides)");
    gen_string->add_option("--out", gen_args.out, "Output file (default stdout)");
    auto* gen_cubic = gen->add_subcommand("cubic", "Random cubic graph (pairing model)");
    gen_cubic->add_option("--n", gen_args.n, "Vertex count (even, >= 4)")->required();
    gen_cubic->add_option("--seed", gen_args.seed, "Seed (LRS_SEED overrides)");
    gen_cubic->add_option("--out", gen_args.out, "Output file (default stdout)");

    std::string scaffold_input;
    auto* scaffold = app.add_subcommand("scaffold", "Contig-per-bin partition report");
    scaffold->add_option("--input", scaffold_input, "Bin label file")->required();

    BenchArgs bench_args;
    auto* bench = app.add_subcommand(
        "bench", "Run a benchmark suite; CSV columns: solver,n,sigma,occ_cap,r,k,trials,seed,verdict,length,wall_ms");
    bench->add_option("--suite", bench_args.suite, "scaling-r | scaling-n | dp-vs-mld")
        ->required()
        ->check(CLI::IsMember({"scaling-r", "scaling-n", "dp-vs-mld"}));
    bench->add_option("--out", bench_args.out, "CSV output file")->required();
    bench->add_option("--seed", bench_args.seed, "Master seed (LRS_SEED overrides)");
    bench->add_flag("--parallel", bench_args.parallel, "Run independent rows concurrently");
    bench->add_option("--reps", bench_args.reps, "Repetitions")->capture_default_str();
    bench->add_option("--trials", bench_args.trials, "MLD trials per row")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*solve) return run_solve(solve_args);
        if (*decide) return run_decide(decide_args);
        if (*misc) return run_reduce_misc(reduce_args);
        if (*compose) return run_reduce_compose(reduce_args);
        if (*gen_string) return run_gen_string(gen_args);
        if (*gen_cubic) return run_gen_cubic(gen_args);
        if (*scaffold) {
            std::cout << lrs::format_scaffold(lrs::scaffold(load_instance(scaffold_input)));
            return exit_ok;
        }
        if (*bench) return run_bench(bench_args);
    } catch (const lrs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return lrs::is_limit(e.kind()) ? exit_limit : exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
