#pragma once

// Experiment grid: (algorithm x problem x run) jobs, persisted as
//
//   <out>/traces/<algo>_<problem>_run<r>.csv   representative trace per run
//   <out>/fronts/<algo>_<problem>_run<r>.csv   final non-dominated objectives
//   <out>/graphs/<algo>_<problem>.<ext>        merged STN per pair
//   <out>/report.csv                           one metrics row per pair
//
// Run r uses seed base_seed + r.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mostn/moead.hpp"
#include "mostn/nsga2.hpp"
#include "mostn/problems.hpp"
#include "mostn/stn.hpp"
#include "mostn/trace.hpp"

namespace mostn {

enum class Algorithm { Moead, Nsga2 };

std::string_view algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    std::vector<Algorithm> algorithms{Algorithm::Moead, Algorithm::Nsga2};
    std::vector<ProblemId> problems = all_problems();
    int runs = 3;
    long budget = 30000;
    int population = 250;
    int n_vectors = 5;
    double precision = kDefaultPrecision;
    double opt_tol = 1e-2;
    std::uint64_t seed = 1;
    std::size_t reference_size = kReferenceFrontSize;
    std::filesystem::path out_dir = "mostn-out";
    GraphFormat format = GraphFormat::GraphML;
    MoeadConfig moead;
    Nsga2Config nsga2;

    /// Applies one `key = value` setting (same names as the config file).
    void set(std::string_view key, std::string_view value);
    void validate() const;

    MoeadConfig moead_for_run(int run) const;
    Nsga2Config nsga2_for_run(int run) const;
};

/// Reads `key = value` lines ('#' starts a comment) on top of `base`.
ExperimentConfig load_config_file(const std::filesystem::path& path, ExperimentConfig base = {});

struct TracedRun {
    RunTrace trace;
    std::vector<ObjectiveVector> final_front;
    long evaluations = 0;
    int iterations = 0;
};

TracedRun run_traced(Algorithm algo, const ProblemSpec& problem, const ExperimentConfig& cfg, int run);

struct MetricsRow {
    std::string algo;
    std::string problem;
    double hv = 0.0;
    double igd = 0.0;
    StnMetrics stn;
};

struct MetricsReport {
    std::vector<MetricsRow> rows;
    std::vector<std::string> failures;

    const MetricsRow* find(std::string_view algo, std::string_view problem) const;
};

/// Mean HV and IGD over the runs' final fronts plus metrics of the merged
/// STN (optimal nodes marked against the analytic front).
MetricsRow evaluate_pair(std::string algo, const ProblemSpec& problem, std::span<const RunTrace> traces,
                         std::span<const std::vector<ObjectiveVector>> fronts, double opt_tol,
                         std::size_t reference_size, StnGraph* graph_out = nullptr);

MetricsReport run_experiment(const ExperimentConfig& cfg);

struct RebuildOptions {
    std::optional<double> precision;
    std::optional<double> opt_tol;
    std::size_t reference_size = kReferenceFrontSize;
    /// When set, merged graphs are (re)written under <out>/graphs.
    std::optional<GraphFormat> export_format;
};

/// Recomputes every pair from the traces and fronts under `out_dir`.
MetricsReport rebuild(const std::filesystem::path& out_dir, const RebuildOptions& opts = {});

/// Report CSV: algo, problem, HV, IGD, then the STN metric columns.
void write_report(const MetricsReport& report, std::ostream& out);
MetricsReport read_report(std::istream& in);
/// Human-readable table, one block per algorithm.
void print_report_table(const MetricsReport& report, std::ostream& out);

void write_front(const std::vector<ObjectiveVector>& front, std::ostream& out);
std::vector<ObjectiveVector> read_front(std::istream& in, std::string_view source);

std::string run_file_stem(std::string_view algo, std::string_view problem, int run);

}  // namespace mostn
