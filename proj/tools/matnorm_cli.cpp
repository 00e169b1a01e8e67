// matnorm - command-line front end: norm values and witnesses, oracle
// cross-checks, the max-cut hardness demonstration, and the scaling
// benchmark.
//
// Exit codes: 0 success, 2 usage/parse errors, 3 enumeration-guard
// refusals, 4 internal invariant failures.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "matnorm/matnorm.hpp"

namespace {

using namespace matnorm;

constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'", 1, 1);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string witness_values(const Vector& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += format_value(w[i]);
    }
    return out;
}

constexpr NormIndex kAxes[3] = {NormIndex::One, NormIndex::Two, NormIndex::Infinity};

// ---------------------------------------------------------------------------
// norm
// ---------------------------------------------------------------------------

struct NormArgs {
    std::string input;
    std::string pq;
    bool witness = false;
    bool force = false;
    unsigned threads = 1;
};

int run_norm(const NormArgs& args) {
    const Matrix a = parse_matrix_csv(read_file(args.input));
    const SignSearchOptions opt{args.force, args.threads};

    if (args.pq == "all") {
        // Rows p, columns q, matching the usual complexity-table layout.
        std::printf("%-7s", "p\\q");
        for (NormIndex q : kAxes) std::printf("%-26s", to_string(q));
        std::printf("\n");
        std::vector<NormResult> results;
        for (NormIndex p : kAxes) {
            std::printf("%-7s", to_string(p));
            for (NormIndex q : kAxes) {
                NormResult r = induced_norm(a, {p, q}, opt);
                std::printf("%-26s", format_value(r.value).c_str());
                results.push_back(std::move(r));
            }
            std::printf("\n");
        }
        if (args.witness) {
            for (const NormResult& r : results)
                std::printf("witness %s: %s\n", pair_label(r.pair).c_str(),
                            witness_values(r.witness).c_str());
        }
        return 0;
    }

    const auto pair = parse_norm_pair(args.pq);
    if (!pair) throw CLI::ValidationError("--pq", "expected 'p,q' with p,q in {1,2,inf} or 'all'");
    const NormResult r = induced_norm(a, *pair, opt);
    std::printf("%s\n", format_value(r.value).c_str());
    if (args.witness) std::printf("witness: %s\n", witness_values(r.witness).c_str());
    return 0;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckArgs {
    std::string input;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    std::string corrupt;  // test hook: fake a broken closed form for one pair
};

int run_check(const CheckArgs& args) {
    const Matrix a = parse_matrix_csv(read_file(args.input));
    std::optional<NormPair> corrupt;
    if (!args.corrupt.empty()) {
        corrupt = parse_norm_pair(args.corrupt);
        if (!corrupt) throw CLI::ValidationError("--corrupt", "expected 'p,q'");
    }

    SplitMix64 rng(args.seed);
    bool sound = true;
    std::printf("%-8s%-26s%-26s%s\n", "pair", "value", "lower_bound", "gap");
    for (const NormPair pair : all_norm_pairs()) {
        double value = induced_norm(a, pair).value;
        if (corrupt && *corrupt == pair) value *= 0.9;
        const OracleReport rep = lower_bound_estimate(a, pair, args.samples, rng);
        const double gap = value - rep.lower_bound;
        if (gap < -1e-9 * std::max(1.0, value)) sound = false;
        std::printf("%-8s%-26s%-26s%s\n", pair_label(pair).c_str(),
                    format_value(value).c_str(), format_value(rep.lower_bound).c_str(),
                    format_value(gap).c_str());
    }
    if (!sound) {
        std::printf("check: FAIL (an oracle lower bound exceeded its closed form)\n");
        return kExitInternal;
    }
    std::printf("check: OK (9 pairs, samples=%llu, seed=%llu)\n",
                static_cast<unsigned long long>(args.samples),
                static_cast<unsigned long long>(args.seed));
    return 0;
}

// ---------------------------------------------------------------------------
// hardness
// ---------------------------------------------------------------------------

struct HardnessArgs {
    std::string graph;
    std::uint64_t threshold = 1;
    bool bruteforce = false;
};

int run_hardness(const HardnessArgs& args) {
    const Graph g = parse_graph(read_file(args.graph));
    const McMatrix mc = McMatrix::from_graph(g);
    const std::size_t n = mc.size();

    const double v = induced_norm(sqrt_mc(mc), {NormIndex::Infinity, NormIndex::Two}).value;
    const double v2 = v * v;
    const bool decision = decide_threshold_via_norm(mc, args.threshold);

    std::printf("graph: %zu vertices, %zu edges\n", g.vertex_count(), g.edges().size());
    std::printf("mc matrix: %zux%zu\n", n, n);
    std::printf("norm_inf2_squared: %s\n", format_value(v2).c_str());
    std::printf("threshold: %llu\n", static_cast<unsigned long long>(args.threshold));
    std::printf("decision: %s\n", decision ? "YES" : "NO");

    if (args.bruteforce) {
        const auto bf = quadratic_max_bruteforce(mc.inner());
        const bool bf_decision = bf.value >= static_cast<double>(args.threshold);
        std::printf("bruteforce_max: %s\n", format_value(bf.value).c_str());
        std::printf("agreement: %s\n", bf_decision == decision ? "OK" : "MISMATCH");
        if (bf_decision != decision)
            throw internal_error("hardness: norm decision disagrees with brute force");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchArgs {
    std::string pq;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::uint32_t reps = 5;
    std::uint64_t seed = 1;
    std::string out;
};

int run_bench(const BenchArgs& args) {
    const auto pair = parse_norm_pair(args.pq);
    if (!pair) throw CLI::ValidationError("--pq", "expected 'p,q' with p,q in {1,2,inf}");
    if (args.n_min < 1 || args.n_max < args.n_min)
        throw CLI::ValidationError("--n-min/--n-max", "need 1 <= n-min <= n-max");

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (args.out != "-") {
        file.open(args.out);
        if (!file) throw parse_error("cannot open '" + args.out + "' for writing", 1, 1);
        out = &file;
    }

    *out << "pair,n,m,reps,median_seconds,seed\n";
    for (std::size_t n = args.n_min; n <= args.n_max; ++n) {
        try {
            const BenchRecord r = bench_norm(*pair, n, n, args.reps, args.seed);
            *out << pair_token(r.pair) << ',' << r.n << ',' << r.m << ',' << r.reps << ','
                 << format_value(r.median_seconds) << ',' << r.seed << '\n';
        } catch (const guard_error& e) {
            std::cerr << "warning: skipping n=" << n << ": " << e.what() << "\n";
            *out << "# skipped n=" << n << ": enumeration guard\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"induced (p,q) matrix norms for p,q in {1,2,inf}: closed-form values with "
                 "witness vectors, sampling oracles, a max-cut hardness demonstration, and a "
                 "scaling benchmark"};
    app.require_subcommand(1);

    NormArgs norm_args;
    auto* norm = app.add_subcommand("norm", "compute an induced norm of a CSV matrix");
    norm->add_option("--input", norm_args.input, "matrix CSV file")->required();
    norm->add_option("--pq", norm_args.pq, "norm pair 'p,q' or 'all'")->required();
    norm->add_flag("--witness", norm_args.witness, "also print the achieving vector");
    norm->add_flag("--force", norm_args.force, "override the 2^30 enumeration guard");
    norm->add_option("--threads", norm_args.threads, "workers for the sign enumeration")
        ->check(CLI::Range(1u, 256u));

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "closed forms vs. sampling oracle, all nine pairs");
    check->add_option("--input", check_args.input, "matrix CSV file")->required();
    check->add_option("--samples", check_args.samples, "oracle samples per pair")
        ->check(CLI::PositiveNumber);
    check->add_option("--seed", check_args.seed, "oracle RNG seed");
    check->add_option("--corrupt", check_args.corrupt, "perturb one closed form (self-test)")
        ->group("");  // hidden

    HardnessArgs hardness_args;
    auto* hardness =
        app.add_subcommand("hardness", "max-cut threshold decision via the (inf,2) norm");
    hardness->add_option("--graph", hardness_args.graph, "graph file")->required();
    hardness->add_option("--threshold", hardness_args.threshold, "decision threshold M >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    hardness->add_flag("--bruteforce", hardness_args.bruteforce,
                       "also run the exhaustive quadratic maximum");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "time one norm across sizes, CSV output");
    bench->add_option("--pq", bench_args.pq, "norm pair 'p,q'")->required();
    bench->add_option("--n-min", bench_args.n_min, "smallest size")->required();
    bench->add_option("--n-max", bench_args.n_max, "largest size")->required();
    bench->add_option("--reps", bench_args.reps, "timed repetitions (median reported)")
        ->check(CLI::Range(3u, 1000u));
    bench->add_option("--seed", bench_args.seed, "matrix generation seed");
    bench->add_option("--out", bench_args.out, "output CSV path, '-' for stdout")->required();

    try {
        app.parse(argc, argv);
        if (norm->parsed()) return run_norm(norm_args);
        if (check->parsed()) return run_check(check_args);
        if (hardness->parsed()) return run_hardness(hardness_args);
        if (bench->parsed()) return run_bench(bench_args);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const guard_error& e) {
        std::cerr << "error: " << e.what() << " (norm accepts --force)\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
