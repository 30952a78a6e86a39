#include "roommates/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "roommates/bench.hpp"
#include "roommates/checker.hpp"
#include "roommates/gen.hpp"
#include "roommates/io.hpp"
#include "roommates/oracle.hpp"

namespace roommates {

namespace {

constexpr int kExitEfficient = 0;
constexpr int kExitInefficient = 1;
constexpr int kExitError = 2;

void print_matching_line(std::ostream& out, const Matching& m) {
    auto line = m.line();
    for (std::size_t i = 0; i < line.size(); ++i)
        out << line[i] << (i + 1 == line.size() ? "\n" : " ");
}

const char* cause_name(Cause c) {
    return c == Cause::IrrationalPair ? "irrational-pair" : "alternating-cycle";
}

int report_verdict(std::ostream& out, bool efficient, const std::optional<Matching>& witness,
                   const std::optional<Cause>& cause, int iterations, bool want_witness,
                   const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        j["efficient"] = efficient;
        j["cause"] = cause ? nlohmann::json(cause_name(*cause)) : nlohmann::json(nullptr);
        j["witness"] = witness ? nlohmann::json(witness->line()) : nlohmann::json(nullptr);
        j["iterations"] = iterations;
        out << j.dump() << "\n";
    } else {
        out << (efficient ? "efficient" : "inefficient") << "\n";
        if (want_witness && witness)
            print_matching_line(out, *witness);
    }
    return efficient ? kExitEfficient : kExitInefficient;
}

int cmd_check(const std::string& path, bool want_witness, const std::string& format,
              bool dump_graphs, std::ostream& out, std::ostream& err) {
    Instance inst = load_instance(path);
    if (dump_graphs) {
        EfficiencyGraph g = build_graph(inst);
        err << to_dot(g) << to_dot(build_modified_graph(g));
    }
    Verdict v = check(inst);
    return report_verdict(out, v.efficient, v.witness, v.cause, v.iterations, want_witness,
                          format);
}

int cmd_oracle(const std::string& path, std::ostream& out) {
    Instance inst = load_instance(path);
    auto [efficient, dominator] = oracle::oracle_efficient(inst);
    out << (efficient ? "efficient" : "inefficient") << "\n";
    if (dominator)
        print_matching_line(out, *dominator);
    return efficient ? kExitEfficient : kExitInefficient;
}

int cmd_gen(int n, std::uint64_t seed, double solo_prob, std::ostream& out) {
    out << render_instance(generate_instance({n, seed, solo_prob}));
    return kExitEfficient;
}

int cmd_bench(const std::vector<int>& sizes, int reps, std::uint64_t seed,
              const std::string& out_path, std::ostream& out) {
    BenchOptions options;
    options.sizes = sizes;
    options.reps = reps;
    options.seed = seed;
    auto records = run_bench(options);
    std::string csv = bench_csv(records);
    if (out_path.empty()) {
        out << csv;
    } else {
        std::ofstream f(out_path);
        if (!f)
            raise(Errc::IoError, "cannot write '" + out_path + "'");
        f << csv;
    }
    double slope = fit_loglog_slope(records);
    if (std::isnan(slope))
        out << "slope: not-available\n";
    else
        out << "slope: " << slope << "\n";
    return kExitEfficient;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pareto efficiency checker for roommate matchings"};
    app.require_subcommand(1);

    std::string path;
    bool want_witness = false;
    std::string format = "text";
    bool dump_graphs = false;
    auto* check_cmd = app.add_subcommand("check", "Decide whether a matching is Pareto efficient");
    check_cmd->add_option("file", path, "instance file")->required();
    check_cmd->add_flag("--witness", want_witness, "print a dominating matching when inefficient");
    check_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    check_cmd->add_flag("--dump-graphs", dump_graphs,
                        "debug-print both graphs to stderr (DOT-like)");

    std::string oracle_path;
    auto* oracle_cmd =
        app.add_subcommand("oracle", "Brute-force verdict by scanning all matchings (n <= 12)");
    oracle_cmd->add_option("file", oracle_path, "instance file")->required();

    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    double solo_prob = 0.2;
    auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random instance to stdout");
    gen_cmd->add_option("--n", gen_n, "agent count (>= 3)")->required();
    gen_cmd->add_option("--seed", gen_seed, "64-bit seed");
    gen_cmd->add_option("--solo-prob", solo_prob, "probability an agent stays alone");

    std::vector<int> sizes;
    int reps = 5;
    std::uint64_t bench_seed_opt = 0;
    std::string out_path;
    auto* bench_cmd = app.add_subcommand("bench", "Time check() across instance sizes");
    bench_cmd->add_option("--sizes", sizes, "instance sizes")->required()->delimiter(',');
    bench_cmd->add_option("--reps", reps, "repetitions per size");
    bench_cmd->add_option("--seed", bench_seed_opt, "base seed");
    bench_cmd->add_option("--out", out_path, "CSV destination (stdout when omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitEfficient;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (check_cmd->parsed())
            return cmd_check(path, want_witness, format, dump_graphs, out, err);
        if (oracle_cmd->parsed())
            return cmd_oracle(oracle_path, out);
        if (gen_cmd->parsed())
            return cmd_gen(gen_n, gen_seed, solo_prob, out);
        if (bench_cmd->parsed())
            return cmd_bench(sizes, reps, bench_seed_opt, out_path, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

} // namespace roommates
