#include "dyts/moead.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "dyts/error.hpp"
#include "dyts/metrics.hpp"

namespace dyts {

namespace {

constexpr std::size_t kMaxParents = 5;

std::string lower(std::string_view text) {
    std::string out;
    for (char c : text) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

// Draws `count` distinct members of `scope`, all different from `target`.
// Falls back to the whole population when the scope is too small.
void draw_parents(std::span<const std::size_t> scope, std::size_t target, std::size_t count, std::size_t n,
                  Rng& rng, std::array<std::size_t, kMaxParents>& out) {
    const bool target_in_scope = std::find(scope.begin(), scope.end(), target) != scope.end();
    const std::size_t available = scope.size() - (target_in_scope ? 1 : 0);
    const bool use_all = available < count;
    const std::size_t pool = use_all ? n : scope.size();
    for (std::size_t p = 0; p < count; ++p) {
        for (;;) {
            const std::size_t slot = rng.below(pool);
            const std::size_t candidate = use_all ? slot : scope[slot];
            if (candidate == target) continue;
            if (std::find(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(p), candidate) !=
                out.begin() + static_cast<std::ptrdiff_t>(p)) {
                continue;
            }
            out[p] = candidate;
            break;
        }
    }
}

std::vector<double> scalarized(const std::vector<Subproblem>& sps, const Vec& ideal) {
    std::vector<double> g(sps.size());
    for (std::size_t i = 0; i < sps.size(); ++i) {
        g[i] = tchebycheff_unchecked(sps[i].incumbent.f, sps[i].weight, ideal);
    }
    return g;
}

} // namespace

std::optional<Policy> Policy::parse(std::string_view text) {
    const std::string key = lower(text);
    if (key == "dyts") return dyts();
    if (key == "ts") return vanilla_ts();
    if (key == "random") return uniform_random();
    constexpr std::string_view prefix = "fixed:";
    if (key.rfind(prefix, 0) == 0) {
        if (auto op = parse_operator(text.substr(prefix.size()))) return fixed(*op);
    }
    return std::nullopt;
}

std::string Policy::name() const {
    switch (kind) {
    case PolicyKind::Dyts: return "dyts";
    case PolicyKind::VanillaTs: return "ts";
    case PolicyKind::UniformRandom: return "random";
    case PolicyKind::Fixed: return "fixed:" + std::string(operator_name(fixed_op));
    }
    return "unknown";
}

std::string Policy::file_label() const {
    std::string out = name();
    std::replace(out.begin(), out.end(), ':', '-');
    return out;
}

std::vector<Vec> EvolutionResult::objectives() const {
    std::vector<Vec> out;
    out.reserve(subproblems.size());
    for (const auto& sp : subproblems) out.push_back(sp.incumbent.f);
    return out;
}

void validate_config(const Problem& problem, const AlgoConfig& config) {
    const std::size_t m = problem.num_objectives();
    if (m != 2 && m != 3) {
        throw ConfigError("only two- and three-objective problems are supported");
    }
    if (config.population_size < m) {
        throw ConfigError("population size must be at least the number of objectives");
    }
    const std::size_t n = m == 2 ? config.population_size
                                 : (lattice_divisions(config.population_size) + 1) *
                                       (lattice_divisions(config.population_size) + 2) / 2;
    if (n < kMaxParents + 1) {
        throw ConfigError("population of " + std::to_string(n) + " is too small for five-parent operators");
    }
    if (config.neighborhood_size == 0 || config.neighborhood_size > n) {
        throw ConfigError("neighborhood size must be in [1, N]");
    }
    if (!(config.delta_prob >= 0.0 && config.delta_prob <= 1.0)) {
        throw ConfigError("delta must lie in [0, 1]");
    }
    if (!(config.threshold_c > 1.0)) {
        throw ConfigError("bandit threshold must exceed 1");
    }
    if (config.max_evaluations < n) {
        throw ConfigError("evaluation budget " + std::to_string(config.max_evaluations) +
                          " is smaller than the population " + std::to_string(n));
    }
    if (config.utility_period == 0 || config.dra_update_interval == 0 || config.usage_window == 0) {
        throw ConfigError("periods must be positive");
    }
    if (config.tournament_size == 0) {
        throw ConfigError("tournament size must be positive");
    }
}

EvolutionResult evolve(const Problem& problem, const AlgoConfig& config, const Policy& policy, Rng& rng,
                       const EvolveHooks& hooks) {
    validate_config(problem, config);
    const std::size_t m = problem.num_objectives();
    const Bounds& bounds = problem.bounds();
    const std::size_t nvar = problem.num_variables();
    const OperatorParams params = config.operator_params.value_or(OperatorParams::defaults(nvar));

    EvolutionResult result;
    const std::vector<Vec> weights = generate_weights(m, config.population_size);
    const std::size_t n = weights.size();
    const auto neighborhoods = build_neighborhoods(weights, config.neighborhood_size);
    const auto boundary = boundary_indices(weights);
    const std::size_t per_generation = n / 5 > m ? n / 5 - m : 0;

    std::vector<Vec> xs(n, Vec(nvar));
    for (auto& x : xs) {
        for (std::size_t j = 0; j < nvar; ++j) {
            x[j] = bounds.lower[j] + rng.uniform01() * (bounds.upper[j] - bounds.lower[j]);
        }
    }
    std::vector<Vec> fs = evaluate_batch(problem, xs);

    auto& sps = result.subproblems;
    sps.resize(n);
    Vec& ideal = result.ideal;
    ideal.assign(m, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        sps[i].weight = weights[i];
        sps[i].incumbent = {std::move(xs[i]), std::move(fs[i])};
        sps[i].neighborhood = neighborhoods[i];
        sps[i].utility = 1.0;
        update_ideal(ideal, sps[i].incumbent.f);
    }
    std::size_t neval = n;

    const double threshold = policy.kind == PolicyKind::VanillaTs ? std::numeric_limits<double>::infinity()
                                                                   : config.threshold_c;
    result.bandit = init_model(kOperatorCount, threshold);
    const bool learns = policy.kind == PolicyKind::Dyts || policy.kind == PolicyKind::VanillaTs;

    // Scalarized values of past generations for the improvement rate,
    // indexed by generation modulo the ring size.
    const std::size_t ring = config.dra_update_interval + 1;
    std::vector<std::vector<double>> history(ring);
    history[0] = scalarized(sps, ideal);

    std::vector<double> utilities(n, 1.0);
    std::array<std::size_t, kMaxParents> parents{};
    std::array<std::span<const double>, kMaxParents> parent_views{};
    Vec child_f(m);
    UsageWindow window;
    std::size_t gen = 0;

    auto maybe_snapshot = [&] {
        if (hooks.on_snapshot && hooks.snapshot_interval > 0 && neval % hooks.snapshot_interval == 0) {
            hooks.on_snapshot(neval, sps);
        }
    };
    maybe_snapshot();

    while (neval < config.max_evaluations) {
        if (gen % config.usage_window == 0) {
            window = UsageWindow{};
            window.first_generation = gen;
        }
        for (std::size_t i = 0; i < n; ++i) utilities[i] = sps[i].utility;
        const auto selected = tournament_select_indices(utilities, boundary, per_generation, rng,
                                                        config.tournament_size);
        for (std::size_t i : selected) {
            OperatorId op = policy.fixed_op;
            switch (policy.kind) {
            case PolicyKind::Dyts:
            case PolicyKind::VanillaTs:
                op = kOperatorPool[select_operator(result.bandit, rng)];
                break;
            case PolicyKind::UniformRandom:
                op = kOperatorPool[rng.below(kOperatorCount)];
                break;
            case PolicyKind::Fixed:
                break;
            }
            bool local = false;
            const auto scope = mating_scope(i, neighborhoods, config.delta_prob, n, rng, &local);

            const std::size_t needed = parent_count(op);
            draw_parents(scope, i, needed, n, rng, parents);
            for (std::size_t p = 0; p < needed; ++p) parent_views[p] = sps[parents[p]].incumbent.x;
            const std::span<const std::span<const double>> parent_span(parent_views.data(), needed);

            Vec child = apply_operator(op, sps[i].incumbent.x, parent_span, bounds, params, rng);
            child = polynomial_mutation(child, bounds, params, rng);
            problem.evaluate_into(child, child_f);
            ++neval;
            update_ideal(ideal, child_f);

            const FitnessImprovement gain = fitness_improvement(child_f, scope, sps, ideal);
            OffspringEvent event;
            event.generation = gen;
            event.subproblem = i;
            event.op = op;
            event.used_neighborhood = local;
            event.fi = gain.fi;
            if (gain.fi > 0.0) {
                Subproblem& target = sps[gain.best_index];
                event.reward = 1;
                event.replaced = gain.best_index;
                event.g_before = tchebycheff_unchecked(target.incumbent.f, target.weight, ideal);
                event.g_after = tchebycheff_unchecked(child_f, target.weight, ideal);
                target.incumbent.x = std::move(child);
                target.incumbent.f = child_f;
                ++result.replacements;
            }
            if (learns) {
                reward_arm(result.bandit, static_cast<std::size_t>(op), event.reward);
            }
            const auto op_index = static_cast<std::size_t>(op);
            ++result.operator_totals[op_index];
            ++window.counts[op_index];
            event.evaluations = neval;
            event.ideal = &ideal;
            if (hooks.on_offspring) hooks.on_offspring(event);
            maybe_snapshot();
        }
        ++gen;

        std::vector<double> current = scalarized(sps, ideal);
        if (gen % config.utility_period == 0) {
            const std::size_t back = gen >= config.dra_update_interval ? gen - config.dra_update_interval : 0;
            const std::vector<double>& old = history[back % ring];
            for (std::size_t k = 0; k < n; ++k) {
                sps[k].utility = update_utility(sps[k].utility, compute_fir(old[k], current[k]));
            }
        }
        history[gen % ring] = std::move(current);

        if (gen % config.usage_window == 0 || neval >= config.max_evaluations) {
            window.arms = result.bandit.arms;
            result.usage.push_back(window);
        }
    }
    result.evaluations = neval;
    result.generations = gen;
    return result;
}

} // namespace dyts
