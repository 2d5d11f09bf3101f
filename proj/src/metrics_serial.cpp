#include <algorithm>
#include <numeric>

#include "dyts/metrics.hpp"

namespace dyts::serial {

double igd(const ObjectiveSet& solutions, const ObjectiveSet& reference) {
    detail::check_igd_inputs(solutions, reference);
    double sum = 0.0;
    for (const auto& r : reference) {
        sum += detail::nearest_distance(r, solutions);
    }
    return sum / static_cast<double>(reference.size());
}

MonteCarloEstimate hypervolume_monte_carlo(const ObjectiveSet& solutions, std::span<const double> ref_point,
                                           std::size_t samples, std::uint64_t seed) {
    const detail::McBox box = detail::prepare_monte_carlo(solutions, ref_point);
    if (box.set.empty()) return {};
    std::size_t hits = 0;
    for (std::size_t begin = 0, chunk = 0; begin < samples; begin += detail::kMonteCarloChunk, ++chunk) {
        const std::size_t size = std::min(detail::kMonteCarloChunk, samples - begin);
        hits += detail::count_chunk(box, ref_point, chunk, size, seed);
    }
    return detail::finish_monte_carlo(box, hits, samples);
}

std::vector<Vec> evaluate_batch(const Problem& problem, const std::vector<Vec>& xs) {
    std::vector<Vec> out;
    out.reserve(xs.size());
    for (const auto& x : xs) {
        Vec f(problem.num_objectives());
        problem.evaluate_into(x, f);
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace dyts::serial
