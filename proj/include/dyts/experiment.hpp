#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dyts/metrics.hpp"
#include "dyts/moead.hpp"
#include "dyts/problems.hpp"
#include "dyts/stats.hpp"

namespace dyts {

/// Standard settings: N = 300 and 300,000 evaluations for two-objective UF,
/// N = 600 (595 on the lattice) and 300,000 for three-objective UF, N = 100
/// and 25,000 for WFG; T = 20, delta = 0.8, C = 100, utility period 50.
AlgoConfig default_config(ProblemId id);

/// (2, 2) for two-objective UF, (2, 2, 2) for three-objective UF, (3, 5) for WFG.
Vec default_hv_reference(ProblemId id);

struct MetricSnapshot {
    std::size_t evaluations = 0;
    double igd = 0.0;
    double hv = 0.0;
};

struct RunRecord {
    ProblemId problem = ProblemId::UF1;
    Policy policy;
    std::uint64_t seed = 0;
    double final_igd = 0.0;
    double final_hv = 0.0;
    std::size_t evaluations = 0;
    std::size_t generations = 0;
    std::size_t replacements = 0;
    ObjectiveSet front;  // nondominated final objective vectors
    std::vector<MetricSnapshot> snapshots;
    std::array<std::size_t, kOperatorCount> operator_totals{};
    std::vector<UsageWindow> usage;
    double wall_seconds = 0.0;
};

/// Everything needed to score runs on one problem.
struct ProblemContext {
    Problem problem;
    AlgoConfig config;
    ObjectiveSet reference;
    Vec hv_reference;
};

/// Runs one (problem, policy, seed) cell. The RNG stream is keyed by the
/// problem, so different policies with one seed start from the same
/// population. IGD and HV are measured on the nondominated final set.
RunRecord run_single(const ProblemContext& ctx, const Policy& policy, std::uint64_t seed,
                     std::size_t snapshot_interval = 0);

struct ExperimentConfig {
    std::vector<ProblemId> problems;
    std::vector<Policy> policies;
    std::vector<std::uint64_t> seeds;
    std::map<ProblemId, AlgoConfig> overrides;  // replaces default_config per problem
    std::optional<std::size_t> max_evaluations;
    std::optional<std::size_t> population_size;
    std::size_t budget_divisor = 1;
    std::map<ProblemId, Vec> hv_reference_overrides;
    std::size_t snapshot_interval = 1000;
    std::size_t reference_points = 10000;
    std::filesystem::path output_dir = "results";
    std::optional<std::filesystem::path> reference_dir;  // defaults to output_dir / "reference"
    std::size_t jobs = 1;
    bool quiet = true;
};

/// The --quick preset: five seeds when none were given and a third of the budget.
void apply_quick_preset(ExperimentConfig& config, bool seeds_given);

/// Throws ConfigError for empty matrices or an unwritable output directory.
void validate_experiment(const ExperimentConfig& config);

/// Effective algorithm settings for one problem after overrides.
AlgoConfig effective_config(const ExperimentConfig& config, ProblemId id);

struct SummaryRow {
    ProblemId problem = ProblemId::UF1;
    Policy policy;
    std::size_t runs = 0;
    double igd_mean = 0.0;
    double igd_std = 0.0;
    double igd_median = 0.0;
    double hv_mean = 0.0;
    double hv_std = 0.0;
    double hv_median = 0.0;
    std::string igd_vs_dyts;  // "+", "-", "~", or empty for the reference policy / no DYTS runs
    double igd_p = 1.0;
    std::string hv_vs_dyts;
    double hv_p = 1.0;
};

/// Per (problem, policy) statistics, each policy compared against the DYTS
/// runs of the same problem with the 5% rank-sum test.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& runs);

/// Executes the whole matrix and writes runs.csv, summary.csv, table.txt,
/// timings.csv and the per-run front/operator/snapshot files.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config);

/// Reference set for IGD, read from `<dir>/<PROBLEM>_<count>.txt` when present
/// and written there otherwise.
ObjectiveSet load_or_build_reference(const Problem& problem, std::size_t count, const std::filesystem::path& dir);

/// Whitespace-separated text, one point per line, 17 significant digits.
void write_points(const std::filesystem::path& path, const ObjectiveSet& points);
ObjectiveSet read_points(const std::filesystem::path& path);

std::string format_real(double value);

} // namespace dyts
