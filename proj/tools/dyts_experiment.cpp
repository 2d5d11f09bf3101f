// Command-line driver for the experiment matrix and reference-set export.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dyts/error.hpp"
#include "dyts/experiment.hpp"

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::size_t start = 0;
        while (start <= item.size()) {
            const std::size_t comma = item.find(',', start);
            const std::string token = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!token.empty()) out.push_back(token);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return out;
}

std::vector<dyts::ProblemId> parse_problems(const std::vector<std::string>& names) {
    std::vector<dyts::ProblemId> out;
    for (const auto& name : split_list(names)) {
        if (name == "all" || name == "ALL") {
            auto all = dyts::all_problems();
            out.insert(out.end(), all.begin(), all.end());
            continue;
        }
        auto id = dyts::parse_problem(name);
        if (!id) throw dyts::ConfigError("unknown problem '" + name + "'");
        out.push_back(*id);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MOEA/D with dynamic Thompson sampling operator selection: experiment runner"};
    app.require_subcommand(0, 1);

    std::vector<std::string> problems{"UF1"};
    std::vector<std::string> policies{"dyts"};
    std::vector<std::uint64_t> seeds;
    std::size_t runs = 0;
    std::size_t max_evals = 0;
    std::size_t pop_size = 0;
    std::string out_dir = "results";
    std::string ref_dir;
    bool quick = false;
    std::size_t jobs = 1;
    std::size_t snapshot_interval = 1000;
    std::size_t reference_points = 10000;
    bool verbose = false;

    app.add_option("--problems", problems, "Problems (UF1..UF10, WFG1..WFG9, all); comma or space separated");
    app.add_option("--policies", policies, "Policies: dyts, ts, random, fixed:<op>");
    app.add_option("--seeds", seeds, "Explicit seeds");
    app.add_option("--runs", runs, "Use seeds 1..N (ignored when --seeds is given)");
    app.add_option("--max-evals", max_evals, "Override the evaluation budget");
    app.add_option("--pop-size", pop_size, "Override the requested population size");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--reference-dir", ref_dir, "Cache directory for reference sets (default <out>/reference)");
    app.add_flag("--quick", quick, "Desk-scale preset: 5 seeds, a third of the budget");
    app.add_option("--jobs", jobs, "Runs executed concurrently")->check(CLI::PositiveNumber);
    app.add_option("--snapshot-interval", snapshot_interval, "Evaluations between metric snapshots (0 disables)");
    app.add_option("--reference-points", reference_points, "Reference-set size for IGD");
    app.add_flag("-v,--verbose", verbose, "Print one line per finished run");

    auto* refset = app.add_subcommand("refset", "Export a sampled Pareto front as text");
    std::string refset_problem = "UF1";
    std::size_t refset_count = 10000;
    std::string refset_out;
    refset->add_option("--problem", refset_problem, "Problem name")->required();
    refset->add_option("--count", refset_count, "Number of points");
    refset->add_option("--file", refset_out, "Output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (refset->parsed()) {
            auto id = dyts::parse_problem(refset_problem);
            if (!id) throw dyts::ConfigError("unknown problem '" + refset_problem + "'");
            dyts::write_points(refset_out, dyts::sample_true_pf(dyts::Problem(*id), refset_count));
            return 0;
        }

        dyts::ExperimentConfig config;
        config.problems = parse_problems(problems);
        for (const auto& name : split_list(policies)) {
            auto policy = dyts::Policy::parse(name);
            if (!policy) throw dyts::ConfigError("unknown policy '" + name + "'");
            config.policies.push_back(*policy);
        }
        const bool seeds_given = !seeds.empty() || runs > 0;
        if (!seeds.empty()) {
            config.seeds = seeds;
        } else {
            const std::size_t count = runs > 0 ? runs : 1;
            for (std::size_t s = 1; s <= count; ++s) config.seeds.push_back(s);
        }
        if (quick) dyts::apply_quick_preset(config, seeds_given);
        if (max_evals > 0) config.max_evaluations = max_evals;
        if (pop_size > 0) config.population_size = pop_size;
        config.output_dir = out_dir;
        if (!ref_dir.empty()) config.reference_dir = ref_dir;
        config.jobs = jobs;
        config.snapshot_interval = snapshot_interval;
        config.reference_points = reference_points;
        config.quiet = !verbose;

        const auto records = dyts::run_experiment(config);
        std::cout << "finished " << records.size() << " runs; results in " << out_dir << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
