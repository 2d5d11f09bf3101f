#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dyts/operators.hpp"
#include "dyts/problems.hpp"

namespace dyts {

/// Approximation or reference set: objective vectors sharing one dimension.
using ObjectiveSet = std::vector<Vec>;

/// Pareto dominance for minimization: a is no worse everywhere and a != b.
bool dominates(std::span<const double> a, std::span<const double> b) noexcept;

/// Members not dominated by any other member; duplicates are kept once, in
/// order of first appearance.
ObjectiveSet nondominated_filter(const ObjectiveSet& set);

/// Mean over reference points of the distance to the nearest solution.
/// Parallel over reference points; the sum is taken in index order so the
/// result does not depend on the thread count.
double igd(const ObjectiveSet& solutions, const ObjectiveSet& reference);

/// Exact hypervolume for two or three objectives. Points that do not strictly
/// dominate `ref_point` are dropped and dominated points are ignored.
double hypervolume(const ObjectiveSet& solutions, std::span<const double> ref_point);

struct MonteCarloEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Hypervolume estimated from uniform samples in the box spanned by the
/// componentwise minimum of the set and `ref_point`. Samples are split into
/// fixed chunks with one RNG stream each, so the estimate is reproducible for
/// any number of threads.
MonteCarloEstimate hypervolume_monte_carlo(const ObjectiveSet& solutions, std::span<const double> ref_point,
                                           std::size_t samples, std::uint64_t seed);

/// Evaluates every decision vector; parallel over the batch.
std::vector<Vec> evaluate_batch(const Problem& problem, const std::vector<Vec>& xs);

/// Reference (single-threaded) versions of the parallel kernels above.
namespace serial {
double igd(const ObjectiveSet& solutions, const ObjectiveSet& reference);
MonteCarloEstimate hypervolume_monte_carlo(const ObjectiveSet& solutions, std::span<const double> ref_point,
                                           std::size_t samples, std::uint64_t seed);
std::vector<Vec> evaluate_batch(const Problem& problem, const std::vector<Vec>& xs);
} // namespace serial

namespace detail {
inline constexpr std::size_t kMonteCarloChunk = 1u << 16;
void check_igd_inputs(const ObjectiveSet& solutions, const ObjectiveSet& reference);
double nearest_distance(std::span<const double> point, const ObjectiveSet& solutions) noexcept;
bool dominated_by_any(std::span<const double> sample, const ObjectiveSet& set) noexcept;
/// Box of the Monte-Carlo estimator; empty `set` when nothing lies inside.
struct McBox {
    ObjectiveSet set;
    Vec lower;
    double volume = 0.0;
};
McBox prepare_monte_carlo(const ObjectiveSet& solutions, std::span<const double> ref_point);
std::size_t count_chunk(const McBox& box, std::span<const double> ref_point, std::size_t chunk,
                        std::size_t samples_in_chunk, std::uint64_t seed);
MonteCarloEstimate finish_monte_carlo(const McBox& box, std::size_t hits, std::size_t samples);
} // namespace detail

} // namespace dyts
