#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyts/bandit.hpp"
#include "dyts/decomposition.hpp"
#include "dyts/operators.hpp"
#include "dyts/problems.hpp"
#include "dyts/rng.hpp"

namespace dyts {

/// How each offspring's reproduction operator is chosen.
enum class PolicyKind { Dyts, VanillaTs, UniformRandom, Fixed };

struct Policy {
    PolicyKind kind = PolicyKind::Dyts;
    OperatorId fixed_op = OperatorId::DeRand1;

    static Policy dyts() { return {PolicyKind::Dyts, OperatorId::DeRand1}; }
    static Policy vanilla_ts() { return {PolicyKind::VanillaTs, OperatorId::DeRand1}; }
    static Policy uniform_random() { return {PolicyKind::UniformRandom, OperatorId::DeRand1}; }
    static Policy fixed(OperatorId op) { return {PolicyKind::Fixed, op}; }

    /// "dyts", "ts", "random" or "fixed:<operator>".
    static std::optional<Policy> parse(std::string_view text);
    /// Canonical name, e.g. "fixed:DE_RAND_1".
    std::string name() const;
    /// Filesystem-safe name, e.g. "fixed-DE_RAND_1".
    std::string file_label() const;

    friend bool operator==(const Policy&, const Policy&) = default;
};

struct AlgoConfig {
    std::size_t population_size = 300;  // requested; the 3-objective lattice may shrink it
    std::size_t neighborhood_size = 20;
    double delta_prob = 0.8;
    double threshold_c = 100.0;
    std::size_t max_evaluations = 300000;
    std::size_t utility_period = 50;       // generations between utility refreshes
    std::size_t dra_update_interval = 50;  // generations spanned by the improvement rate
    std::size_t tournament_size = 10;
    std::size_t usage_window = 100;        // generations per operator-usage window
    std::optional<OperatorParams> operator_params;  // defaults derived from n when empty
};

/// Operator usage over one window of generations, with the bandit state at
/// the window's end.
struct UsageWindow {
    std::size_t first_generation = 0;
    std::array<std::size_t, kOperatorCount> counts{};
    std::vector<ArmState> arms;
};

/// One offspring's trip through the loop, reported to an observer.
struct OffspringEvent {
    static constexpr std::size_t kNotReplaced = std::numeric_limits<std::size_t>::max();

    std::size_t generation = 0;
    std::size_t subproblem = 0;
    OperatorId op = OperatorId::DeRand1;
    bool used_neighborhood = false;
    double fi = 0.0;
    int reward = 0;
    std::size_t replaced = kNotReplaced;
    double g_before = 0.0;  // replaced incumbent's value under the updated ideal
    double g_after = 0.0;   // child's value for the same subproblem
    std::size_t evaluations = 0;
    const Vec* ideal = nullptr;
};

struct EvolveHooks {
    std::function<void(const OffspringEvent&)> on_offspring;
    /// Called with the evaluation count and the current subproblems whenever
    /// the count reaches a multiple of `snapshot_interval` (0 disables).
    std::function<void(std::size_t, const std::vector<Subproblem>&)> on_snapshot;
    std::size_t snapshot_interval = 0;
};

struct EvolutionResult {
    std::vector<Subproblem> subproblems;
    Vec ideal;
    std::size_t evaluations = 0;
    std::size_t generations = 0;
    std::size_t replacements = 0;
    std::array<std::size_t, kOperatorCount> operator_totals{};
    std::vector<UsageWindow> usage;
    BanditModel bandit;

    /// Objective vectors of the final incumbents.
    std::vector<Vec> objectives() const;
};

/// Throws ConfigError when the configuration cannot drive a run on `problem`.
void validate_config(const Problem& problem, const AlgoConfig& config);

/// MOEA/D with dynamic resource allocation and a pluggable operator-selection
/// policy. Runs generations until the evaluation budget is used; the
/// initial population counts against the budget.
EvolutionResult evolve(const Problem& problem, const AlgoConfig& config, const Policy& policy, Rng& rng,
                       const EvolveHooks& hooks = {});

} // namespace dyts
