#include "mostn/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "mostn/indicators.hpp"

namespace mostn {

namespace {

namespace fs = std::filesystem;

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto end = s.find(',', pos);
        if (end == std::string_view::npos) end = s.size();
        auto item = trim(s.substr(pos, end - pos));
        if (!item.empty()) out.push_back(std::move(item));
        pos = end + 1;
    }
    return out;
}

template <typename T>
T to_number(std::string_view key, std::string_view text) {
    const auto t = trim(text);
    T v{};
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
        throw ConfigError("bad value '" + std::string(text) + "' for '" + std::string(key) + "'");
    return v;
}

// 64-bit FNV-1a, rendered as hex; identifies the parameter set in trace headers.
std::string digest(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

int algorithm_order(std::string_view name) {
    try {
        return static_cast<int>(parse_algorithm(name));
    } catch (const std::invalid_argument&) {
        return 100;
    }
}

int problem_order(std::string_view name) {
    try {
        return static_cast<int>(parse_problem_id(name));
    } catch (const std::invalid_argument&) {
        return 100;
    }
}

void sort_rows(std::vector<MetricsRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const MetricsRow& a, const MetricsRow& b) {
        const auto ka = std::make_tuple(algorithm_order(a.algo), a.algo, problem_order(a.problem), a.problem);
        const auto kb = std::make_tuple(algorithm_order(b.algo), b.algo, problem_order(b.problem), b.problem);
        return ka < kb;
    });
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << content;
    if (!f) throw std::runtime_error("failed writing " + path.string());
}

std::string read_file(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void export_pair_graph(const fs::path& out_dir, std::string_view algo, std::string_view problem, const StnGraph& g,
                       GraphFormat format) {
    fs::create_directories(out_dir / "graphs");
    std::ostringstream os;
    export_graph(g, format, os);
    const auto name = std::string(algo) + "_" + std::string(problem) + "." + std::string(file_extension(format));
    write_file(out_dir / "graphs" / name, os.str());
}

}  // namespace

std::string_view algorithm_name(Algorithm a) { return a == Algorithm::Moead ? "moead" : "nsga2"; }

Algorithm parse_algorithm(std::string_view name) {
    if (name == "moead") return Algorithm::Moead;
    if (name == "nsga2") return Algorithm::Nsga2;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "' (moead, nsga2)");
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
    try {
        if (key == "algos") {
            algorithms.clear();
            for (const auto& a : split_list(value)) algorithms.push_back(parse_algorithm(a));
        } else if (key == "problems") {
            problems.clear();
            for (const auto& p : split_list(value)) problems.push_back(parse_problem_id(p));
        } else if (key == "runs") runs = to_number<int>(key, value);
        else if (key == "budget") budget = to_number<long>(key, value);
        else if (key == "population") population = to_number<int>(key, value);
        else if (key == "vectors") n_vectors = to_number<int>(key, value);
        else if (key == "precision") precision = to_number<double>(key, value);
        else if (key == "opt-tol" || key == "opt_tol") opt_tol = to_number<double>(key, value);
        else if (key == "seed") seed = to_number<std::uint64_t>(key, value);
        else if (key == "reference-size") reference_size = to_number<std::size_t>(key, value);
        else if (key == "out") out_dir = trim(value);
        else if (key == "format") format = parse_graph_format(trim(value));
        else if (key == "moead.F") moead.f_scale = to_number<double>(key, value);
        else if (key == "moead.eta") moead.pm_eta = to_number<double>(key, value);
        else if (key == "moead.pm") moead.pm_prob = to_number<double>(key, value);
        else if (key == "moead.nr") moead.nr = to_number<int>(key, value);
        else if (key == "moead.delta") moead.delta_p = to_number<double>(key, value);
        else if (key == "moead.T") moead.neighborhood_fraction = to_number<double>(key, value);
        else if (key == "nsga2.F") nsga2.f_scale = to_number<double>(key, value);
        else if (key == "nsga2.eta") nsga2.pm_eta = to_number<double>(key, value);
        else if (key == "nsga2.pm") nsga2.pm_prob = to_number<double>(key, value);
        else if (key == "nsga2.tournament") nsga2.tournament_size = to_number<int>(key, value);
        else throw ConfigError("unknown setting '" + std::string(key) + "'");
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

void ExperimentConfig::validate() const {
    if (algorithms.empty()) throw ConfigError("no algorithms selected");
    if (problems.empty()) throw ConfigError("no problems selected");
    if (runs < 1) throw ConfigError("runs must be at least 1");
    if (!(precision > 0.0)) throw ConfigError("precision must be positive");
    if (!(opt_tol >= 0.0)) throw ConfigError("opt-tol must be nonnegative");
    if (n_vectors < 1) throw ConfigError("vectors must be at least 1");
    if (population < n_vectors) throw ConfigError("population smaller than the number of tracking vectors");
    if (reference_size < 2) throw ConfigError("reference-size must be at least 2");
    try {
        moead_for_run(0).validate();
        nsga2_for_run(0).validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

MoeadConfig ExperimentConfig::moead_for_run(int run) const {
    MoeadConfig c = moead;
    c.population = population;
    c.budget = budget;
    c.seed = seed + static_cast<std::uint64_t>(run);
    return c;
}

Nsga2Config ExperimentConfig::nsga2_for_run(int run) const {
    Nsga2Config c = nsga2;
    c.population = population;
    c.budget = budget;
    c.seed = seed + static_cast<std::uint64_t>(run);
    return c;
}

ExperimentConfig load_config_file(const std::filesystem::path& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const auto t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
        try {
            base.set(trim(std::string_view(t).substr(0, eq)), trim(std::string_view(t).substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return base;
}

TracedRun run_traced(Algorithm algo, const ProblemSpec& problem, const ExperimentConfig& cfg, int run) {
    TraceSettings settings;
    settings.algo = std::string(algorithm_name(algo));
    settings.problem = problem.name();
    settings.run = run;
    settings.n_vectors = static_cast<std::size_t>(cfg.n_vectors);
    settings.precision = cfg.precision;
    TraceRecorder recorder(settings, problem.objectives);
    auto observer = [&](int iter, std::span<const Solution> pop, std::span<const double> z) {
        recorder.observe(iter, pop, z);
    };

    RunResult result;
    TraceMeta meta;
    meta.precision = cfg.precision;
    std::ostringstream desc;
    if (algo == Algorithm::Moead) {
        const auto c = cfg.moead_for_run(run);
        meta.seed = c.seed;
        desc << c.describe();
        result = run_moead(problem, c, observer);
    } else {
        const auto c = cfg.nsga2_for_run(run);
        meta.seed = c.seed;
        desc << c.describe();
        result = run_nsga2(problem, c, observer);
    }
    desc << " vectors=" << cfg.n_vectors << " precision=" << format_real(cfg.precision);
    meta.config = digest(desc.str());
    recorder.set_meta(meta);

    TracedRun out;
    out.trace = recorder.take();
    std::vector<ObjectiveVector> objs;
    objs.reserve(result.population.size());
    for (const auto& s : result.population) objs.push_back(s.f);
    out.final_front = filter_nondominated(objs);
    out.evaluations = result.evaluations;
    out.iterations = result.iterations;
    return out;
}

const MetricsRow* MetricsReport::find(std::string_view algo, std::string_view problem) const {
    for (const auto& r : rows)
        if (r.algo == algo && r.problem == problem) return &r;
    return nullptr;
}

MetricsRow evaluate_pair(std::string algo, const ProblemSpec& problem, std::span<const RunTrace> traces,
                         std::span<const std::vector<ObjectiveVector>> fronts, double opt_tol,
                         std::size_t reference_size, StnGraph* graph_out) {
    MetricsRow row;
    row.algo = std::move(algo);
    row.problem = problem.name();
    const auto reference = sample_pareto_front(problem, reference_size);
    const auto hv_ref = default_hv_reference(problem.objectives);
    if (!fronts.empty()) {
        double hv_sum = 0.0, igd_sum = 0.0;
        for (const auto& f : fronts) {
            hv_sum += hypervolume(f, hv_ref).volume;
            igd_sum += igd(f, reference);
        }
        row.hv = hv_sum / static_cast<double>(fronts.size());
        row.igd = igd_sum / static_cast<double>(fronts.size());
    }
    auto g = build_merged_stn(traces);
    mark_optimal_nodes(g, reference, opt_tol);
    row.stn = compute_stn_metrics(g);
    if (graph_out) *graph_out = std::move(g);
    return row;
}

MetricsReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    struct Job {
        Algorithm algo;
        ProblemId problem;
        int run;
        TracedRun result;
        std::string error;
    };
    std::vector<Job> jobs;
    for (auto a : cfg.algorithms)
        for (auto p : cfg.problems)
            for (int r = 0; r < cfg.runs; ++r) jobs.push_back({a, p, r, {}, {}});

    fs::create_directories(cfg.out_dir / "traces");
    fs::create_directories(cfg.out_dir / "fronts");

    const auto n_jobs = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t j = 0; j < n_jobs; ++j) {
        auto& job = jobs[static_cast<std::size_t>(j)];
        try {
            const auto problem = make_problem(job.problem);
            job.result = run_traced(job.algo, problem, cfg, job.run);
            const auto stem = run_file_stem(algorithm_name(job.algo), problem.name(), job.run);
            std::ostringstream trace_text, front_text;
            write_trace(job.result.trace, trace_text);
            write_front(job.result.final_front, front_text);
            write_file(cfg.out_dir / "traces" / (stem + ".csv"), trace_text.str());
            write_file(cfg.out_dir / "fronts" / (stem + ".csv"), front_text.str());
        } catch (const std::exception& e) {
            job.error = e.what();
        }
    }

    MetricsReport report;
    for (auto a : cfg.algorithms) {
        for (auto p : cfg.problems) {
            const auto problem = make_problem(p);
            const std::string pair = std::string(algorithm_name(a)) + "/" + problem.name();
            std::vector<RunTrace> traces;
            std::vector<std::vector<ObjectiveVector>> fronts;
            std::string error;
            for (auto& job : jobs) {
                if (job.algo != a || job.problem != p) continue;
                if (!job.error.empty() && error.empty()) error = "run " + std::to_string(job.run) + ": " + job.error;
                traces.push_back(job.result.trace);
                fronts.push_back(job.result.final_front);
            }
            if (!error.empty()) {
                report.failures.push_back(pair + ": " + error);
                continue;
            }
            try {
                StnGraph g;
                report.rows.push_back(
                    evaluate_pair(std::string(algorithm_name(a)), problem, traces, fronts, cfg.opt_tol,
                                  cfg.reference_size, &g));
                export_pair_graph(cfg.out_dir, algorithm_name(a), problem.name(), g, cfg.format);
            } catch (const std::exception& e) {
                report.failures.push_back(pair + ": " + e.what());
            }
        }
    }
    sort_rows(report.rows);
    std::ostringstream os;
    write_report(report, os);
    write_file(cfg.out_dir / "report.csv", os.str());
    return report;
}

MetricsReport rebuild(const std::filesystem::path& out_dir, const RebuildOptions& opts) {
    const auto trace_dir = out_dir / "traces";
    if (!fs::is_directory(trace_dir)) throw std::runtime_error("no traces directory under " + out_dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(trace_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    struct Pair {
        std::vector<RunTrace> traces;
        std::vector<std::vector<ObjectiveVector>> fronts;
    };
    std::map<std::pair<std::string, std::string>, Pair> pairs;
    for (const auto& path : files) {
        const auto stem = path.stem().string();
        const auto first = stem.find('_');
        const auto second = stem.find('_', first + 1);
        if (first == std::string::npos || second == std::string::npos)
            throw ParseError(path.string() + ": trace file name is not <algo>_<problem>_run<r>.csv");
        auto& pair = pairs[{stem.substr(0, first), stem.substr(first + 1, second - first - 1)}];
        std::istringstream text(read_file(path));
        auto trace = read_trace(text, path.string());
        if (opts.precision) trace = with_precision(trace, *opts.precision);
        pair.traces.push_back(std::move(trace));
        const auto front_path = out_dir / "fronts" / path.filename();
        if (fs::exists(front_path)) {
            std::istringstream ftext(read_file(front_path));
            pair.fronts.push_back(read_front(ftext, front_path.string()));
        }
    }

    MetricsReport report;
    for (auto& [key, pair] : pairs) {
        try {
            const auto problem = make_problem(parse_problem_id(key.second));
            StnGraph g;
            report.rows.push_back(evaluate_pair(key.first, problem, pair.traces, pair.fronts,
                                                opts.opt_tol.value_or(1e-2), opts.reference_size, &g));
            if (opts.export_format) export_pair_graph(out_dir, key.first, key.second, g, *opts.export_format);
        } catch (const std::exception& e) {
            report.failures.push_back(key.first + "/" + key.second + ": " + e.what());
        }
    }
    sort_rows(report.rows);
    return report;
}

void write_report(const MetricsReport& report, std::ostream& out) {
    out << "algo,problem,HV,IGD,Nodes,Edges-ratio,Shared-ratio,Opt,Comp,MaxIn,MeanIn,MaxOut,MeanOut\n";
    for (const auto& r : report.rows) {
        out << r.algo << ',' << r.problem << ',' << fixed(r.hv, 4) << ',' << fixed(r.igd, 4) << ',' << r.stn.nodes
            << ',' << fixed(r.stn.edge_ratio, 2) << ',' << fixed(r.stn.shared_ratio, 2) << ',' << r.stn.optimal << ','
            << r.stn.components << ',' << r.stn.max_in << ',' << fixed(r.stn.mean_in, 2) << ',' << r.stn.max_out
            << ',' << fixed(r.stn.mean_out, 2) << '\n';
    }
}

MetricsReport read_report(std::istream& in) {
    MetricsReport report;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        if (++lineno == 1 || line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(cell);
        if (f.size() != 13) throw ParseError("report line " + std::to_string(lineno) + ": expected 13 fields");
        MetricsRow r;
        r.algo = f[0];
        r.problem = f[1];
        r.hv = std::stod(f[2]);
        r.igd = std::stod(f[3]);
        r.stn.nodes = std::stoul(f[4]);
        r.stn.edge_ratio = std::stod(f[5]);
        r.stn.shared_ratio = std::stod(f[6]);
        r.stn.optimal = std::stoul(f[7]);
        r.stn.components = std::stoul(f[8]);
        r.stn.max_in = std::stol(f[9]);
        r.stn.mean_in = std::stod(f[10]);
        r.stn.max_out = std::stol(f[11]);
        r.stn.mean_out = std::stod(f[12]);
        report.rows.push_back(std::move(r));
    }
    return report;
}

void print_report_table(const MetricsReport& report, std::ostream& out) {
    std::string current;
    for (const auto& r : report.rows) {
        if (r.algo != current) {
            current = r.algo;
            out << "\n" << current << "\n"
                << std::left << std::setw(8) << "" << std::right << std::setw(8) << "HV" << std::setw(8) << "IGD"
                << std::setw(7) << "Nodes" << std::setw(7) << "Edges" << std::setw(8) << "Shared" << std::setw(6)
                << "Opt" << std::setw(6) << "Comp" << std::setw(8) << "MaxIn" << std::setw(8) << "MeanIn"
                << std::setw(8) << "MaxOut" << std::setw(9) << "MeanOut" << "\n";
        }
        out << std::left << std::setw(8) << r.problem << std::right << std::setw(8) << fixed(r.hv, 2) << std::setw(8)
            << fixed(r.igd, 2) << std::setw(7) << r.stn.nodes << std::setw(7) << fixed(r.stn.edge_ratio, 2)
            << std::setw(8) << fixed(r.stn.shared_ratio, 2) << std::setw(6) << r.stn.optimal << std::setw(6)
            << r.stn.components << std::setw(8) << r.stn.max_in << std::setw(8) << fixed(r.stn.mean_in, 2)
            << std::setw(8) << r.stn.max_out << std::setw(9) << fixed(r.stn.mean_out, 2) << "\n";
    }
}

void write_front(const std::vector<ObjectiveVector>& front, std::ostream& out) {
    const std::size_t m = front.empty() ? 0 : front.front().size();
    for (std::size_t k = 0; k < m; ++k) out << (k ? ",f" : "f") << k + 1;
    out << '\n';
    for (const auto& f : front) {
        for (std::size_t k = 0; k < f.size(); ++k) out << (k ? "," : "") << format_real(f[k]);
        out << '\n';
    }
}

std::vector<ObjectiveVector> read_front(std::istream& in, std::string_view source) {
    std::vector<ObjectiveVector> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        if (++lineno == 1 || line.empty()) continue;
        ObjectiveVector f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || ptr != cell.data() + cell.size())
                throw ParseError(std::string(source) + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
            f.push_back(v);
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::string run_file_stem(std::string_view algo, std::string_view problem, int run) {
    return std::string(algo) + "_" + std::string(problem) + "_run" + std::to_string(run);
}

}  // namespace mostn
