#include "dyts/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dyts/error.hpp"

namespace dyts {

namespace {

constexpr std::size_t kExactLimit = 12;

std::vector<double> pooled(std::span<const double> a, std::span<const double> b) {
    std::vector<double> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

void require_samples(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        throw ParameterError("rank-sum test needs two non-empty samples");
    }
}

} // namespace

std::string_view verdict_symbol(Verdict v) noexcept {
    switch (v) {
    case Verdict::ABetter: return "A_better";
    case Verdict::BBetter: return "B_better";
    case Verdict::NoDifference: return "no_difference";
    }
    return "no_difference";
}

std::vector<double> mid_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double rank_sum_exact_p(std::span<const double> a, std::span<const double> b) {
    require_samples(a, b);
    const auto ranks = mid_ranks(pooled(a, b));
    // Mid-ranks are multiples of 1/2, so doubled ranks are integers.
    std::vector<std::size_t> doubled(ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) doubled[i] = static_cast<std::size_t>(std::lround(2.0 * ranks[i]));
    const std::size_t n1 = a.size();
    const std::size_t total = std::accumulate(doubled.begin(), doubled.end(), std::size_t{0});
    std::size_t observed = 0;
    for (std::size_t i = 0; i < n1; ++i) observed += doubled[i];

    // ways[j][s]: subsets of size j with doubled rank sum s.
    std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(total + 1, 0.0));
    ways[0][0] = 1.0;
    for (std::size_t r : doubled) {
        for (std::size_t j = n1; j >= 1; --j) {
            for (std::size_t s = total; s >= r; --s) {
                ways[j][s] += ways[j - 1][s - r];
            }
        }
    }
    double all = 0.0;
    double low = 0.0;
    double high = 0.0;
    for (std::size_t s = 0; s <= total; ++s) {
        const double w = ways[n1][s];
        all += w;
        if (s <= observed) low += w;
        if (s >= observed) high += w;
    }
    return std::min(1.0, 2.0 * std::min(low, high) / all);
}

double rank_sum_normal_p(std::span<const double> a, std::span<const double> b) {
    require_samples(a, b);
    const auto values = pooled(a, b);
    const auto ranks = mid_ranks(values);
    const double n1 = static_cast<double>(a.size());
    const double n2 = static_cast<double>(b.size());
    const double n = n1 + n2;
    double w = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) w += ranks[i];

    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }
    const double expected = n1 * (n + 1.0) / 2.0;
    const double variance = n1 * n2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if (!(variance > 0.0)) return 1.0;
    const double z = std::max(0.0, std::fabs(w - expected) - 0.5) / std::sqrt(variance);
    return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double significance,
                                Sense sense) {
    require_samples(a, b);
    RankSumResult result;
    result.exact = a.size() <= kExactLimit && b.size() <= kExactLimit;
    result.p_value = result.exact ? rank_sum_exact_p(a, b) : rank_sum_normal_p(a, b);
    const auto ranks = mid_ranks(pooled(a, b));
    for (std::size_t i = 0; i < a.size(); ++i) result.rank_sum_a += ranks[i];
    if (result.p_value >= significance) {
        return result;
    }
    const double ma = median(a);
    const double mb = median(b);
    bool a_lower = ma < mb;
    if (ma == mb) {
        const double expected = static_cast<double>(a.size()) * static_cast<double>(ranks.size() + 1) / 2.0;
        a_lower = result.rank_sum_a < expected;
    }
    const bool a_wins = (sense == Sense::Minimize) ? a_lower : !a_lower;
    result.verdict = a_wins ? Verdict::ABetter : Verdict::BBetter;
    return result;
}

double median(std::span<const double> values) {
    if (values.empty()) return 0.0;
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

double mean(std::span<const double> values) {
    if (values.empty()) return 0.0;
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double stddev(std::span<const double> values) {
    if (values.size() < 2) return 0.0;
    const double mu = mean(values);
    double ss = 0.0;
    for (double v : values) ss += (v - mu) * (v - mu);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

} // namespace dyts
