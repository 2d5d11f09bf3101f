#include "dyts/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dyts/error.hpp"

namespace dyts {

bool dominates(std::span<const double> a, std::span<const double> b) noexcept {
    bool strictly = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly = true;
    }
    return strictly;
}

ObjectiveSet nondominated_filter(const ObjectiveSet& set) {
    ObjectiveSet out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < set.size() && !drop; ++j) {
            if (j != i && dominates(set[j], set[i])) drop = true;
        }
        if (drop) continue;
        if (std::find(out.begin(), out.end(), set[i]) == out.end()) {
            out.push_back(set[i]);
        }
    }
    return out;
}

namespace detail {

void check_igd_inputs(const ObjectiveSet& solutions, const ObjectiveSet& reference) {
    if (solutions.empty() || reference.empty()) {
        throw ParameterError("IGD needs non-empty solution and reference sets");
    }
    const std::size_t m = reference.front().size();
    for (const auto& p : solutions) {
        if (p.size() != m) throw ParameterError("IGD: objective dimension mismatch");
    }
    for (const auto& p : reference) {
        if (p.size() != m) throw ParameterError("IGD: objective dimension mismatch");
    }
}

double nearest_distance(std::span<const double> point, const ObjectiveSet& solutions) noexcept {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : solutions) {
        double d2 = 0.0;
        for (std::size_t k = 0; k < point.size(); ++k) {
            const double d = point[k] - s[k];
            d2 += d * d;
        }
        best = std::min(best, d2);
    }
    return std::sqrt(best);
}

bool dominated_by_any(std::span<const double> sample, const ObjectiveSet& set) noexcept {
    for (const auto& p : set) {
        bool inside = true;
        for (std::size_t k = 0; k < sample.size(); ++k) {
            if (p[k] > sample[k]) {
                inside = false;
                break;
            }
        }
        if (inside) return true;
    }
    return false;
}

McBox prepare_monte_carlo(const ObjectiveSet& solutions, std::span<const double> ref_point) {
    McBox box;
    const std::size_t m = ref_point.size();
    for (const auto& p : solutions) {
        if (p.size() != m) throw ParameterError("hypervolume: objective dimension mismatch");
        bool inside = true;
        for (std::size_t k = 0; k < m; ++k) inside = inside && p[k] < ref_point[k];
        if (inside) box.set.push_back(p);
    }
    if (box.set.empty()) return box;
    box.lower.assign(ref_point.begin(), ref_point.end());
    for (const auto& p : box.set) {
        for (std::size_t k = 0; k < m; ++k) box.lower[k] = std::min(box.lower[k], p[k]);
    }
    box.volume = 1.0;
    for (std::size_t k = 0; k < m; ++k) box.volume *= ref_point[k] - box.lower[k];
    return box;
}

std::size_t count_chunk(const McBox& box, std::span<const double> ref_point, std::size_t chunk,
                        std::size_t samples_in_chunk, std::uint64_t seed) {
    Rng rng(seed, chunk);
    const std::size_t m = ref_point.size();
    Vec sample(m);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples_in_chunk; ++s) {
        for (std::size_t k = 0; k < m; ++k) {
            sample[k] = box.lower[k] + rng.uniform01() * (ref_point[k] - box.lower[k]);
        }
        if (dominated_by_any(sample, box.set)) ++hits;
    }
    return hits;
}

MonteCarloEstimate finish_monte_carlo(const McBox& box, std::size_t hits, std::size_t samples) {
    if (box.set.empty() || samples == 0) return {};
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    return {box.volume * p, box.volume * std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

} // namespace detail

double igd(const ObjectiveSet& solutions, const ObjectiveSet& reference) {
    detail::check_igd_inputs(solutions, reference);
    const auto count = static_cast<std::ptrdiff_t>(reference.size());
    std::vector<double> nearest(reference.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        nearest[static_cast<std::size_t>(i)] = detail::nearest_distance(reference[static_cast<std::size_t>(i)], solutions);
    }
    return std::accumulate(nearest.begin(), nearest.end(), 0.0) / static_cast<double>(reference.size());
}

MonteCarloEstimate hypervolume_monte_carlo(const ObjectiveSet& solutions, std::span<const double> ref_point,
                                           std::size_t samples, std::uint64_t seed) {
    const detail::McBox box = detail::prepare_monte_carlo(solutions, ref_point);
    if (box.set.empty()) return {};
    const std::size_t chunks = (samples + detail::kMonteCarloChunk - 1) / detail::kMonteCarloChunk;
    std::vector<std::size_t> hits(chunks, 0);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
        const auto chunk = static_cast<std::size_t>(c);
        const std::size_t begin = chunk * detail::kMonteCarloChunk;
        const std::size_t size = std::min(detail::kMonteCarloChunk, samples - begin);
        hits[chunk] = detail::count_chunk(box, ref_point, chunk, size, seed);
    }
    return detail::finish_monte_carlo(box, std::accumulate(hits.begin(), hits.end(), std::size_t{0}), samples);
}

std::vector<Vec> evaluate_batch(const Problem& problem, const std::vector<Vec>& xs) {
    std::vector<Vec> out(xs.size(), Vec(problem.num_objectives()));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(xs.size()); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        problem.evaluate_into(xs[idx], out[idx]);
    }
    return out;
}

// ---- exact hypervolume ---------------------------------------------------

namespace {

// Area dominated by 2-D points (already inside the box) up to ref.
double sweep_2d(std::vector<std::array<double, 2>> pts, double r0, double r1) {
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double floor_f2 = r1;
    for (const auto& p : pts) {
        if (p[1] < floor_f2) {
            area += (r0 - p[0]) * (floor_f2 - p[1]);
            floor_f2 = p[1];
        }
    }
    return area;
}

} // namespace

double hypervolume(const ObjectiveSet& solutions, std::span<const double> ref_point) {
    const std::size_t m = ref_point.size();
    if (m != 2 && m != 3) {
        throw ParameterError("hypervolume supports two or three objectives");
    }
    ObjectiveSet inside;
    for (const auto& p : solutions) {
        if (p.size() != m) throw ParameterError("hypervolume: objective dimension mismatch");
        bool ok = true;
        for (std::size_t k = 0; k < m; ++k) ok = ok && p[k] < ref_point[k];
        if (ok) inside.push_back(p);
    }
    if (inside.empty()) return 0.0;
    inside = nondominated_filter(inside);

    if (m == 2) {
        std::vector<std::array<double, 2>> pts;
        pts.reserve(inside.size());
        for (const auto& p : inside) pts.push_back({p[0], p[1]});
        return sweep_2d(std::move(pts), ref_point[0], ref_point[1]);
    }

    // Slice along the third objective: between consecutive f3 levels the
    // cross-section is the 2-D region of every point at or below the level.
    std::sort(inside.begin(), inside.end(), [](const Vec& a, const Vec& b) { return a[2] < b[2]; });
    double volume = 0.0;
    std::vector<std::array<double, 2>> active;
    for (std::size_t i = 0; i < inside.size(); ++i) {
        active.push_back({inside[i][0], inside[i][1]});
        const double top = i + 1 < inside.size() ? inside[i + 1][2] : ref_point[2];
        const double height = top - inside[i][2];
        if (height > 0.0) {
            volume += sweep_2d(active, ref_point[0], ref_point[1]) * height;
        }
    }
    return volume;
}

} // namespace dyts
