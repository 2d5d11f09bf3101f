#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace dyts {

enum class Verdict { ABetter, BBetter, NoDifference };

/// Whether smaller (IGD) or larger (HV) values are better.
enum class Sense { Minimize, Maximize };

std::string_view verdict_symbol(Verdict v) noexcept;

struct RankSumResult {
    Verdict verdict = Verdict::NoDifference;
    double p_value = 1.0;
    double rank_sum_a = 0.0;
    bool exact = false;
};

/// Two-sided Wilcoxon rank-sum test with mid-ranks for ties. Uses the exact
/// permutation distribution when both samples have at most 12 values and the
/// tie-corrected normal approximation (with continuity correction) otherwise.
/// When significant, the sample with the better median wins.
RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                double significance = 0.05, Sense sense = Sense::Minimize);

/// Mid-ranks (1-based) of the pooled sample a ++ b.
std::vector<double> mid_ranks(std::span<const double> pooled);

double rank_sum_exact_p(std::span<const double> a, std::span<const double> b);
double rank_sum_normal_p(std::span<const double> a, std::span<const double> b);

double median(std::span<const double> values);
double mean(std::span<const double> values);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double stddev(std::span<const double> values);

} // namespace dyts
