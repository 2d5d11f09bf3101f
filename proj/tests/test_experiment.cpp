#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <dyts/error.hpp>
#include <dyts/experiment.hpp>
#include <dyts/metrics.hpp>
#include <dyts/stats.hpp>

using namespace dyts;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("dyts_test_" + name);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

ExperimentConfig tiny(const fs::path& out) {
    ExperimentConfig c;
    c.problems = {ProblemId::UF1};
    c.policies = {Policy::dyts()};
    c.seeds = {1, 2};
    c.max_evaluations = 2000;
    c.population_size = 40;
    c.reference_points = 500;
    c.snapshot_interval = 500;
    c.output_dir = out;
    return c;
}

} // namespace

TEST_CASE("default configurations") {
    const AlgoConfig uf1 = default_config(ProblemId::UF1);
    CHECK(uf1.population_size == 300);
    CHECK(uf1.max_evaluations == 300000);
    const AlgoConfig wfg3 = default_config(ProblemId::WFG3);
    CHECK(wfg3.population_size == 100);
    CHECK(wfg3.max_evaluations == 25000);
    const AlgoConfig uf8 = default_config(ProblemId::UF8);
    CHECK(uf8.population_size == 600);
    CHECK(generate_weights(3, uf8.population_size).size() == 595);
    for (ProblemId id : all_problems()) {
        const AlgoConfig c = default_config(id);
        CHECK(c.neighborhood_size == 20);
        CHECK(c.delta_prob == 0.8);
        CHECK(c.threshold_c == 100.0);
        CHECK(c.utility_period == 50);
    }
    CHECK(default_hv_reference(ProblemId::UF1) == Vec{2.0, 2.0});
    CHECK(default_hv_reference(ProblemId::UF9) == Vec{2.0, 2.0, 2.0});
    CHECK(default_hv_reference(ProblemId::WFG7) == Vec{3.0, 5.0});
}

TEST_CASE("quick preset") {
    ExperimentConfig c;
    c.problems = {ProblemId::UF1};
    apply_quick_preset(c, false);
    CHECK(c.seeds == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    CHECK(effective_config(c, ProblemId::UF1).max_evaluations == 100000);
    ExperimentConfig given;
    given.seeds = {9};
    apply_quick_preset(given, true);
    CHECK(given.seeds == std::vector<std::uint64_t>{9});
}

TEST_CASE("runs.csv has one row per run and matches the front dumps") {
    const fs::path out = scratch("rows");
    const ExperimentConfig c = tiny(out);
    const auto records = run_experiment(c);
    REQUIRE(records.size() == 2);
    const auto rows = read_csv(out / "runs.csv");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0][0] == "problem");
    const ObjectiveSet reference = read_points(out / "reference" / "UF1_500.txt");
    CHECK(reference.size() == 500);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][0] == "UF1");
        CHECK(rows[i][1] == "dyts");
        const std::string stem = "UF1_dyts_" + rows[i][2];
        const ObjectiveSet front = read_points(out / ("front_" + stem + ".dat"));
        CHECK(front.size() == std::stoul(rows[i][6]));
        CHECK(nondominated_filter(front).size() == front.size());
        CHECK(igd(front, reference) == std::stod(rows[i][7]));
        CHECK(hypervolume(front, Vec{2.0, 2.0}) == std::stod(rows[i][8]));
        CHECK(fs::exists(out / ("operators_" + stem + ".csv")));
        const auto snaps = read_csv(out / ("snapshots_" + stem + ".csv"));
        CHECK(snaps.size() == 1 + 2000 / 500);
    }
    CHECK(fs::exists(out / "timings.csv"));
    CHECK(fs::exists(out / "table.txt"));
}

TEST_CASE("identical configurations give byte-identical outputs") {
    const fs::path a = scratch("det_a");
    const fs::path b = scratch("det_b");
    ExperimentConfig ca = tiny(a);
    ca.policies = {Policy::dyts(), Policy::uniform_random()};
    ExperimentConfig cb = ca;
    cb.output_dir = b;
    cb.jobs = 2;
    run_experiment(ca);
    run_experiment(cb);
    CHECK(slurp(a / "runs.csv") == slurp(b / "runs.csv"));
    CHECK(slurp(a / "summary.csv") == slurp(b / "summary.csv"));
    std::size_t fronts = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("front_", 0) == 0 || name.rfind("operators_", 0) == 0) {
            CHECK(slurp(entry.path()) == slurp(b / name));
            fronts += name.rfind("front_", 0) == 0;
        }
    }
    CHECK(fronts == 4);
}

TEST_CASE("summary carries a rank-sum verdict recomputable from runs.csv") {
    const fs::path out = scratch("summary");
    ExperimentConfig c = tiny(out);
    c.policies = {Policy::dyts(), Policy::fixed(OperatorId::DeRand1)};
    c.seeds = {1, 2, 3, 4, 5};
    c.snapshot_interval = 0;
    run_experiment(c);

    std::map<std::string, std::vector<double>> igds;
    std::map<std::string, std::vector<double>> hvs;
    for (const auto& row : read_csv(out / "runs.csv")) {
        if (row[0] == "problem") continue;
        igds[row[1]].push_back(std::stod(row[7]));
        hvs[row[1]].push_back(std::stod(row[8]));
    }
    const auto summary = read_csv(out / "summary.csv");
    REQUIRE(summary.size() == 3);
    CHECK(summary[0][9] == "igd_vs_dyts");
    for (std::size_t i = 1; i < summary.size(); ++i) {
        const auto& row = summary[i];
        const std::string policy = row[1];
        CHECK(std::stoul(row[2]) == 5);
        CHECK(std::stod(row[3]) == mean(igds[policy]));
        CHECK(std::stod(row[4]) == stddev(igds[policy]));
        CHECK(std::stod(row[5]) == median(igds[policy]));
        CHECK(std::stod(row[6]) == mean(hvs[policy]));
        if (policy == "dyts") {
            CHECK(row[9].empty());
        } else {
            const auto t = wilcoxon_rank_sum(igds[policy], igds["dyts"], 0.05, Sense::Minimize);
            const std::string expected = t.verdict == Verdict::ABetter ? "+" : t.verdict == Verdict::BBetter ? "-" : "~";
            CHECK(row[9] == expected);
            CHECK(std::stod(row[10]) == t.p_value);
        }
    }
}

TEST_CASE("policies share the initial population for a seed") {
    ProblemContext ctx{Problem(ProblemId::UF1), default_config(ProblemId::UF1), sample_true_pf(Problem(ProblemId::UF1), 200),
                       {2.0, 2.0}};
    ctx.config.population_size = 30;
    ctx.config.max_evaluations = 30;
    const auto a = run_single(ctx, Policy::dyts(), 4);
    const auto b = run_single(ctx, Policy::fixed(OperatorId::UniformMutation), 4);
    CHECK(a.front == b.front);
    CHECK(a.final_igd == b.final_igd);
}

TEST_CASE("configuration errors are raised before any run") {
    const fs::path out = scratch("errors");
    ExperimentConfig c = tiny(out);
    c.problems.clear();
    CHECK_THROWS_AS(run_experiment(c), ConfigError);
    c = tiny(out);
    c.policies.clear();
    CHECK_THROWS_AS(run_experiment(c), ConfigError);
    c = tiny(out);
    c.seeds.clear();
    CHECK_THROWS_AS(run_experiment(c), ConfigError);
    c = tiny(out);
    c.hv_reference_overrides[ProblemId::UF1] = {1.0, 1.0, 1.0};
    CHECK_THROWS_AS(run_experiment(c), ConfigError);
    c = tiny(out);
    c.max_evaluations = 10;
    CHECK_THROWS_AS(run_experiment(c), ConfigError);
    c = tiny("/proc/dyts_cannot_write_here");
    CHECK_THROWS_AS(run_experiment(c), ConfigError);
    CHECK_FALSE(fs::exists(out / "runs.csv"));
}

TEST_CASE("reference sets are cached as text") {
    const fs::path dir = scratch("refcache");
    const Problem p(ProblemId::UF7);
    const ObjectiveSet first = load_or_build_reference(p, 300, dir);
    CHECK(fs::exists(dir / "UF7_300.txt"));
    const ObjectiveSet second = load_or_build_reference(p, 300, dir);
    CHECK(first == second);
    CHECK(first.size() == 300);
}

TEST_CASE("points round-trip with full precision") {
    const fs::path dir = scratch("points");
    fs::create_directories(dir);
    const ObjectiveSet pts{{0.1, 1.0 / 3.0}, {2.0 / 7.0, 1e-300}};
    write_points(dir / "p.txt", pts);
    CHECK(read_points(dir / "p.txt") == pts);
    CHECK(format_real(0.1) == "0.10000000000000001");
}

TEST_CASE("command-line tool") {
    const std::string bin = DYTS_EXPERIMENT_BIN;
    const fs::path out = scratch("cli");
    const std::string ok = bin + " --problems UF2 --policies dyts fixed:DE/rand/2 --seeds 3 --max-evals 1500 --pop-size 30" +
                           " --reference-points 300 --snapshot-interval 0 --out " + out.string() + " > /dev/null 2>&1";
    CHECK(std::system(ok.c_str()) == 0);
    const auto rows = read_csv(out / "runs.csv");
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][1] == "dyts");
    CHECK(rows[2][1] == "fixed:DE_RAND_2");

    auto exit_code = [&](const std::string& args) {
        const std::string cmd = bin + " " + args + " --out " + (out / "bad").string() + " > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };
    CHECK(exit_code("--problems ZDT1 --policies dyts --runs 1") == 2);
    CHECK(exit_code("--problems UF1 --policies greedy --runs 1") == 2);
    CHECK(exit_code("--problems UF1 --policies dyts --runs 1 --max-evals 5") == 2);
    CHECK_FALSE(fs::exists(out / "bad" / "runs.csv"));

    const fs::path ref = out / "uf5.txt";
    const std::string refset = bin + " refset --problem UF5 --count 50 --file " + ref.string();
    CHECK(std::system(refset.c_str()) == 0);
    CHECK(read_points(ref).size() == 21);
}
