#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <dyts/operators.hpp>
#include <dyts/rng.hpp>

namespace dyts::test {

// Kolmogorov-Smirnov distance between the sample and U(0, 1).
inline double ks_uniform(std::vector<double> sample) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max({d, hi - sample[i], sample[i] - lo});
    }
    return d;
}

// Asymptotic 1% critical value of the one-sample KS statistic.
inline double ks_critical_1pct(std::size_t n) {
    return 1.628 / std::sqrt(static_cast<double>(n));
}

// Volume of the union of boxes [p, ref] by inclusion-exclusion over all
// subsets. Exponential, only for a handful of points.
inline double hv_inclusion_exclusion(const std::vector<Vec>& pts, const Vec& ref) {
    std::vector<Vec> inside;
    for (const auto& p : pts) {
        bool ok = true;
        for (std::size_t k = 0; k < ref.size(); ++k) ok = ok && p[k] < ref[k];
        if (ok) inside.push_back(p);
    }
    const std::size_t n = inside.size();
    double total = 0.0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        Vec corner(ref.size(), -INFINITY);
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                ++bits;
                for (std::size_t k = 0; k < ref.size(); ++k) corner[k] = std::max(corner[k], inside[i][k]);
            }
        }
        double vol = 1.0;
        for (std::size_t k = 0; k < ref.size(); ++k) vol *= ref[k] - corner[k];
        total += (bits % 2 == 1 ? 1.0 : -1.0) * vol;
    }
    return total;
}

inline double brute_force_igd(const std::vector<Vec>& sol, const std::vector<Vec>& ref) {
    double sum = 0.0;
    for (const auto& r : ref) {
        double best = INFINITY;
        for (const auto& s : sol) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < r.size(); ++k) d2 += (r[k] - s[k]) * (r[k] - s[k]);
            best = std::min(best, std::sqrt(d2));
        }
        sum += best;
    }
    return sum / static_cast<double>(ref.size());
}

inline Vec random_point(Rng& rng, const Bounds& b) {
    Vec x(b.size());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = b.lower[j] + rng.uniform01() * (b.upper[j] - b.lower[j]);
    return x;
}

// Replays a fixed list of uniform draws.
struct ScriptedDraws {
    std::vector<double> values;
    std::size_t next = 0;
    double operator()() { return values.at(next++); }
};

} // namespace dyts::test
