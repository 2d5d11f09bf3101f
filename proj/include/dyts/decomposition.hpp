#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dyts/operators.hpp"
#include "dyts/rng.hpp"

namespace dyts {

inline constexpr double kWeightFloor = 1e-6;
inline constexpr double kFirFloor = 1e-12;
inline constexpr double kUtilityThreshold = 0.001;

struct Individual {
    Vec x;
    Vec f;
};

/// One scalar subproblem of the decomposition.
struct Subproblem {
    Vec weight;
    Individual incumbent;
    double utility = 1.0;
    std::vector<std::size_t> neighborhood;
};

/// Weighted Tchebycheff distance max_i |f_i - z_i| / max(w_i, 1e-6).
/// Throws ParameterError when the three dimensions disagree.
double tchebycheff(std::span<const double> objectives, std::span<const double> weight,
                   std::span<const double> ideal);

/// Unchecked variant for the inner loop.
double tchebycheff_unchecked(std::span<const double> objectives, std::span<const double> weight,
                             std::span<const double> ideal) noexcept;

/// Evenly spread weights on the unit simplex. m = 2 returns exactly
/// requested_n vectors; m = 3 returns the largest simplex lattice with at most
/// requested_n members.
std::vector<Vec> generate_weights(std::size_t m, std::size_t requested_n);

/// Lattice resolution used for three objectives: largest H with
/// (H + 1)(H + 2) / 2 <= requested_n.
std::size_t lattice_divisions(std::size_t requested_n) noexcept;

/// For each weight, the indices of the T nearest weights (Euclidean; the
/// weight itself first, ties broken by lower index).
std::vector<std::vector<std::size_t>> build_neighborhoods(const std::vector<Vec>& weights, std::size_t T);

/// Indices of weights that are unit vectors (the single-objective subproblems).
std::vector<std::size_t> boundary_indices(const std::vector<Vec>& weights);

/// Componentwise minimum; returns true when any component moved.
bool update_ideal(Vec& ideal, std::span<const double> objectives);

/// Relative improvement (g_old - g_new) / max(|g_old|, 1e-12).
double compute_fir(double g_old, double g_new) noexcept;

/// Utility refresh: 1 when fir > 0.001, else (0.95 + 0.05 * fir / 0.001) * pi
/// with fir floored at 0 so the result stays in (0, 1].
double update_utility(double pi, double fir) noexcept;

/// The boundary subproblems followed by `count` distinct winners of
/// 10-candidate utility tournaments over the remaining subproblems.
std::vector<std::size_t> tournament_select_indices(std::span<const double> utilities,
                                                   std::span<const std::size_t> boundary, std::size_t count,
                                                   Rng& rng, std::size_t tournament_size = 10);

/// The neighborhood of subproblem i with probability delta_prob, else all
/// N indices. `used_neighborhood` reports which branch was taken.
std::vector<std::size_t> mating_scope(std::size_t i, const std::vector<std::vector<std::size_t>>& neighborhoods,
                                      double delta_prob, std::size_t n, Rng& rng,
                                      bool* used_neighborhood = nullptr);

struct FitnessImprovement {
    double fi = 0.0;
    std::size_t best_index = 0;
};

/// Largest drop in scalarized value the child offers over the scope, and the
/// subproblem where it is attained (lowest index on ties). Requires a non-empty scope.
FitnessImprovement fitness_improvement(std::span<const double> child_objectives,
                                       std::span<const std::size_t> scope,
                                       const std::vector<Subproblem>& subproblems,
                                       std::span<const double> ideal);

} // namespace dyts
