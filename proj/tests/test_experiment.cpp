#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mostn/experiment.hpp"

using namespace mostn;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("mostn-test-" + name);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

ExperimentConfig tiny(const fs::path& out) {
    ExperimentConfig c;
    c.algorithms = {Algorithm::Moead};
    c.problems = {ProblemId::UF1};
    c.runs = 1;
    c.budget = 2500;
    c.out_dir = out;
    return c;
}

int cli(const std::string& args) {
    const std::string cmd = std::string(MOSTN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("minimal grid") {
    const auto dir = scratch("minimal");
    const auto report = run_experiment(tiny(dir));
    CHECK(report.failures.empty());
    REQUIRE(report.rows.size() == 1);
    CHECK(fs::exists(dir / "traces" / "moead_UF1_run0.csv"));
    CHECK(fs::exists(dir / "fronts" / "moead_UF1_run0.csv"));
    CHECK(fs::exists(dir / "graphs" / "moead_UF1.graphml"));
    std::istringstream text(slurp(dir / "report.csv"));
    std::string line;
    int lines = 0;
    while (std::getline(text, line)) ++lines;
    CHECK(lines == 2);
    fs::remove_all(dir);
}

TEST_CASE("byte-identical reruns and rebuild") {
    const auto a = scratch("det-a");
    const auto b = scratch("det-b");
    auto cfg = tiny(a);
    cfg.algorithms = {Algorithm::Moead, Algorithm::Nsga2};
    cfg.problems = {ProblemId::UF2, ProblemId::UF9};
    cfg.runs = 2;
    const auto first = run_experiment(cfg);
    cfg.out_dir = b;
    run_experiment(cfg);
    for (const auto& entry : fs::recursive_directory_iterator(a)) {
        if (!entry.is_regular_file()) continue;
        const auto rel = fs::relative(entry.path(), a);
        CHECK(slurp(entry.path()) == slurp(b / rel));
    }
    CHECK(first.rows.size() == 4);

    std::ostringstream original, rebuilt;
    write_report(first, original);
    write_report(rebuild(a), rebuilt);
    CHECK(original.str() == rebuilt.str());
    CHECK(original.str() == slurp(a / "report.csv"));

    const auto coarse = rebuild(a, RebuildOptions{1e-2, std::nullopt, kReferenceFrontSize, std::nullopt});
    for (const auto& row : first.rows) CHECK(coarse.find(row.algo, row.problem)->stn.nodes <= row.stn.nodes);
    CHECK_THROWS(rebuild(a, RebuildOptions{1.5e-3, std::nullopt, kReferenceFrontSize, std::nullopt}));
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("rebuild of a hand-crafted trace") {
    const auto dir = scratch("hand");
    fs::create_directories(dir / "traces");
    std::ofstream(dir / "traces" / "moead_UF1_run0.csv") << kTraceHeader << "\n"
                                                         << "moead,UF1,0,1,0,1_1,0.5,0.5,,0.25,0\n"
                                                         << "moead,UF1,0,2,0,1_1,0.5,0.5,,0.25,0\n"
                                                         << "moead,UF1,0,3,0,2_1,0.4,0.5,,0.25,2\n";
    const auto report = rebuild(dir);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].stn.nodes == 2);
    CHECK(report.rows[0].stn.edges == 1);
    CHECK(report.rows[0].stn.components == 1);

    std::ofstream(dir / "traces" / "moead_UF1_run0.csv") << kTraceHeader << "\nmoead,UF1,0,1\n";
    CHECK_THROWS_AS(rebuild(dir), ParseError);
    fs::remove_all(dir);
}

TEST_CASE("budget accounting per run") {
    ExperimentConfig cfg;
    for (auto algo : {Algorithm::Moead, Algorithm::Nsga2}) {
        for (auto id : {ProblemId::UF1, ProblemId::UF10}) {
            const auto run = run_traced(algo, make_problem(id), cfg, 0);
            CHECK(run.evaluations == 30000);
            CHECK(run.iterations == 120);
            CHECK(run.trace.records.size() == 600);
            REQUIRE(run.trace.meta);
            CHECK(run.trace.meta->seed == 1);
        }
    }
}

TEST_CASE("config handling") {
    ExperimentConfig c;
    c.set("algos", "nsga2");
    c.set("problems", "UF3, UF8");
    c.set("runs", "4");
    CHECK(c.algorithms == std::vector<Algorithm>{Algorithm::Nsga2});
    CHECK(c.problems == std::vector<ProblemId>{ProblemId::UF3, ProblemId::UF8});
    CHECK(c.runs == 4);
    CHECK(c.moead_for_run(2).seed == 3);
    CHECK_THROWS_AS(c.set("colour", "blue"), ConfigError);
    CHECK_THROWS_AS(c.set("runs", "many"), ConfigError);
    c.runs = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);

    const auto dir = scratch("config");
    fs::create_directories(dir);
    std::ofstream(dir / "a.cfg") << "# comment\nbudget = 5000\nmoead.F = 0.5  # inline\n";
    const auto loaded = load_config_file(dir / "a.cfg");
    CHECK(loaded.budget == 5000);
    CHECK(loaded.moead.f_scale == 0.5);
    std::ofstream(dir / "b.cfg") << "budget 5000\n";
    CHECK_THROWS_AS(load_config_file(dir / "b.cfg"), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("report csv round trip") {
    MetricsReport r;
    MetricsRow row;
    row.algo = "moead";
    row.problem = "UF1";
    row.hv = 0.8612;
    row.stn.nodes = 578;
    r.rows.push_back(row);
    std::ostringstream out;
    write_report(r, out);
    std::istringstream in(out.str());
    const auto back = read_report(in);
    REQUIRE(back.rows.size() == 1);
    CHECK(back.rows[0].stn.nodes == 578);
    CHECK(back.rows[0].hv == doctest::Approx(0.8612));
}

TEST_CASE("cli exit codes") {
    const auto dir = scratch("cli");
    CHECK(cli("run --algos moead --problems UF1 --runs 1 --budget 2500 --format dot --out " + dir.string()) == 0);
    CHECK(fs::exists(dir / "graphs" / "moead_UF1.dot"));
    CHECK(cli("report --out " + dir.string()) == 0);
    CHECK(cli("rebuild --precision 0.01 --out " + dir.string()) == 0);
    CHECK(cli("export --format csv --out " + dir.string()) == 0);
    CHECK(fs::exists(dir / "graphs" / "moead_UF1.csv"));
    CHECK(cli("run --algos sa --out " + dir.string()) == 2);
    CHECK(cli("run --budget 2501 --out " + dir.string()) == 2);
    CHECK(cli("--bogus") == 2);
    CHECK(cli("run --problems UF1 --runs 1 --budget 2500 --vectors 300 --out " + dir.string()) == 2);
    fs::remove_all(dir);
}
