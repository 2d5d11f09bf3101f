#include "dyts/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dyts/error.hpp"

namespace dyts {

double tchebycheff_unchecked(std::span<const double> objectives, std::span<const double> weight,
                             std::span<const double> ideal) noexcept {
    double worst = 0.0;
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        const double w = weight[i] > kWeightFloor ? weight[i] : kWeightFloor;
        worst = std::max(worst, std::fabs(objectives[i] - ideal[i]) / w);
    }
    return worst;
}

double tchebycheff(std::span<const double> objectives, std::span<const double> weight,
                   std::span<const double> ideal) {
    if (objectives.size() != weight.size() || objectives.size() != ideal.size()) {
        throw ParameterError("tchebycheff: dimension mismatch");
    }
    return tchebycheff_unchecked(objectives, weight, ideal);
}

std::size_t lattice_divisions(std::size_t requested_n) noexcept {
    std::size_t H = 1;
    while ((H + 2) * (H + 3) / 2 <= requested_n) ++H;
    return H;
}

std::vector<Vec> generate_weights(std::size_t m, std::size_t requested_n) {
    if (m != 2 && m != 3) {
        throw ParameterError("weight generation supports 2 or 3 objectives, got " + std::to_string(m));
    }
    if (requested_n < m) {
        throw ParameterError("need at least m weight vectors");
    }
    std::vector<Vec> out;
    if (m == 2) {
        const double last = static_cast<double>(requested_n - 1);
        for (std::size_t i = 0; i < requested_n; ++i) {
            const double a = static_cast<double>(i) / last;
            out.push_back({a, 1.0 - a});
        }
        return out;
    }
    const std::size_t H = lattice_divisions(requested_n);
    const double h = static_cast<double>(H);
    for (std::size_t i = 0; i <= H; ++i) {
        for (std::size_t j = 0; i + j <= H; ++j) {
            const double a = static_cast<double>(i) / h;
            const double b = static_cast<double>(j) / h;
            out.push_back({a, b, static_cast<double>(H - i - j) / h});
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> build_neighborhoods(const std::vector<Vec>& weights, std::size_t T) {
    const std::size_t n = weights.size();
    if (T == 0 || T > n) {
        throw ParameterError("neighborhood size must be in [1, N]");
    }
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<double> dist(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < weights[i].size(); ++k) {
                const double d = weights[i][k] - weights[j][k];
                d2 += d * d;
            }
            dist[j] = d2;
        }
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
        out[i].assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(T));
    }
    return out;
}

std::vector<std::size_t> boundary_indices(const std::vector<Vec>& weights) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (std::any_of(weights[i].begin(), weights[i].end(), [](double w) { return w == 1.0; })) {
            out.push_back(i);
        }
    }
    return out;
}

bool update_ideal(Vec& ideal, std::span<const double> objectives) {
    if (ideal.size() != objectives.size()) {
        throw ParameterError("update_ideal: dimension mismatch");
    }
    bool moved = false;
    for (std::size_t i = 0; i < ideal.size(); ++i) {
        if (objectives[i] < ideal[i]) {
            ideal[i] = objectives[i];
            moved = true;
        }
    }
    return moved;
}

double compute_fir(double g_old, double g_new) noexcept {
    return (g_old - g_new) / std::max(std::fabs(g_old), kFirFloor);
}

double update_utility(double pi, double fir) noexcept {
    if (fir > kUtilityThreshold) {
        return 1.0;
    }
    const double factor = 0.95 + 0.05 * std::max(fir, 0.0) / kUtilityThreshold;
    return std::max(factor * pi, std::numeric_limits<double>::min());
}

std::vector<std::size_t> tournament_select_indices(std::span<const double> utilities,
                                                   std::span<const std::size_t> boundary, std::size_t count,
                                                   Rng& rng, std::size_t tournament_size) {
    const std::size_t n = utilities.size();
    if (count + boundary.size() > n) {
        throw ParameterError("tournament selection asks for more indices than subproblems");
    }
    std::vector<std::size_t> selected(boundary.begin(), boundary.end());
    std::vector<char> taken(n, 0);
    for (std::size_t b : boundary) taken[b] = 1;
    std::vector<std::size_t> pool;
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!taken[i]) pool.push_back(i);
    }
    for (std::size_t c = 0; c < count; ++c) {
        std::size_t best_slot = rng.below(pool.size());
        for (std::size_t t = 1; t < tournament_size; ++t) {
            const std::size_t slot = rng.below(pool.size());
            if (utilities[pool[slot]] > utilities[pool[best_slot]]) best_slot = slot;
        }
        selected.push_back(pool[best_slot]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_slot));
    }
    return selected;
}

std::vector<std::size_t> mating_scope(std::size_t i, const std::vector<std::vector<std::size_t>>& neighborhoods,
                                      double delta_prob, std::size_t n, Rng& rng, bool* used_neighborhood) {
    const bool local = rng.uniform01() < delta_prob;
    if (used_neighborhood != nullptr) *used_neighborhood = local;
    if (local) {
        return neighborhoods.at(i);
    }
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
}

FitnessImprovement fitness_improvement(std::span<const double> child_objectives,
                                       std::span<const std::size_t> scope,
                                       const std::vector<Subproblem>& subproblems,
                                       std::span<const double> ideal) {
    if (scope.empty()) {
        throw ParameterError("fitness improvement needs a non-empty scope");
    }
    FitnessImprovement best{-std::numeric_limits<double>::infinity(), scope.front()};
    for (std::size_t k : scope) {
        const Subproblem& sp = subproblems[k];
        const double gain = tchebycheff_unchecked(sp.incumbent.f, sp.weight, ideal) -
                            tchebycheff_unchecked(child_objectives, sp.weight, ideal);
        if (gain > best.fi || (gain == best.fi && k < best.best_index)) {
            best = {gain, k};
        }
    }
    return best;
}

} // namespace dyts
