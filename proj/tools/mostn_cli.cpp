// mostn: run MOEA/D-DE and NSGA-II on the UF suite, record search trajectory
// networks, and report graph and Pareto-quality metrics.
//
// Exit codes: 0 success, 1 some (algorithm, problem) pair failed, 2 bad
// configuration or usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "mostn/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitConfig = 2;

std::string default_out_root() {
    if (const char* env = std::getenv("MOSTN_OUT"); env && *env) return env;
    return "mostn-out";
}

int finish(const mostn::MetricsReport& report) {
    for (const auto& f : report.failures) std::cerr << "error: " << f << "\n";
    return report.failures.empty() ? kExitOk : kExitPartial;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Search trajectory networks for multiobjective evolutionary algorithms"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run the algorithm x problem grid and write traces, graphs and report");
    std::string config_file;
    std::string algos, problems, format, out = default_out_root();
    std::optional<int> runs, vectors;
    std::optional<long> budget;
    std::optional<double> precision, opt_tol;
    std::optional<std::uint64_t> seed;
    run->add_option("--config", config_file, "key = value settings file");
    run->add_option("--algos", algos, "comma list of moead,nsga2");
    run->add_option("--problems", problems, "comma list of UF1..UF10");
    run->add_option("--runs", runs, "repeated runs per pair (default 3)");
    run->add_option("--budget", budget, "evaluations per run after initialization (default 30000)");
    run->add_option("--vectors", vectors, "tracking vectors (default 5)");
    run->add_option("--precision", precision, "hypercube side length (default 1e-3)");
    run->add_option("--opt-tol", opt_tol, "objective-space distance for optimal nodes (default 1e-2)");
    run->add_option("--seed", seed, "base seed; run r uses seed + r (default 1)");
    run->add_option("--out", out, "output directory (default $MOSTN_OUT or ./mostn-out)");
    run->add_option("--format", format, "graph export format: graphml, dot, csv");

    // rebuild
    auto* reb = app.add_subcommand("rebuild", "Recompute graphs and metrics from an output directory's traces");
    std::string reb_out = default_out_root(), reb_report, reb_format;
    std::optional<double> reb_precision, reb_tol;
    reb->add_option("--out", reb_out, "output directory of a previous run");
    reb->add_option("--precision", reb_precision, "coarser hypercube side (integer multiple of the recorded one)");
    reb->add_option("--opt-tol", reb_tol, "objective-space distance for optimal nodes");
    reb->add_option("--format", reb_format, "also rewrite graphs/ in this format");
    reb->add_option("--report", reb_report, "write the report CSV here instead of stdout");

    // report
    auto* rep = app.add_subcommand("report", "Print an output directory's report as a table");
    std::string rep_out = default_out_root();
    rep->add_option("--out", rep_out, "output directory");

    // export
    auto* exp = app.add_subcommand("export", "Write merged graphs from traces in the given format");
    std::string exp_out = default_out_root(), exp_format = "graphml";
    std::optional<double> exp_precision, exp_tol;
    exp->add_option("--out", exp_out, "output directory of a previous run");
    exp->add_option("--format", exp_format, "graphml, dot or csv");
    exp->add_option("--precision", exp_precision, "coarser hypercube side");
    exp->add_option("--opt-tol", exp_tol, "objective-space distance for optimal nodes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*run) {
            mostn::ExperimentConfig cfg;
            if (!config_file.empty()) cfg = mostn::load_config_file(config_file, cfg);
            if (!algos.empty()) cfg.set("algos", algos);
            if (!problems.empty()) cfg.set("problems", problems);
            if (runs) cfg.runs = *runs;
            if (budget) cfg.budget = *budget;
            if (vectors) cfg.n_vectors = *vectors;
            if (precision) cfg.precision = *precision;
            if (opt_tol) cfg.opt_tol = *opt_tol;
            if (seed) cfg.seed = *seed;
            if (!format.empty()) cfg.set("format", format);
            if (run->count("--out") || config_file.empty()) cfg.out_dir = out;
            cfg.validate();
            const auto report = mostn::run_experiment(cfg);
            mostn::print_report_table(report, std::cout);
            return finish(report);
        }
        if (*reb) {
            mostn::RebuildOptions opts;
            opts.precision = reb_precision;
            opts.opt_tol = reb_tol;
            if (!reb_format.empty()) opts.export_format = mostn::parse_graph_format(reb_format);
            const auto report = mostn::rebuild(reb_out, opts);
            if (reb_report.empty()) {
                mostn::write_report(report, std::cout);
            } else {
                std::ofstream f(reb_report, std::ios::binary);
                mostn::write_report(report, f);
                if (!f) throw std::runtime_error("failed writing " + reb_report);
            }
            return finish(report);
        }
        if (*rep) {
            std::ifstream f(std::filesystem::path(rep_out) / "report.csv");
            if (!f) throw std::runtime_error("no report.csv under " + rep_out);
            mostn::print_report_table(mostn::read_report(f), std::cout);
            return kExitOk;
        }
        if (*exp) {
            mostn::RebuildOptions opts;
            opts.precision = exp_precision;
            opts.opt_tol = exp_tol;
            opts.export_format = mostn::parse_graph_format(exp_format);
            return finish(mostn::rebuild(exp_out, opts));
        }
    } catch (const mostn::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPartial;
    }
    return kExitOk;
}
