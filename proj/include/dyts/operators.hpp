#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dyts/rng.hpp"

namespace dyts {

using Vec = std::vector<double>;

/// Box constraints of the decision space.
struct Bounds {
    Vec lower;
    Vec upper;

    std::size_t size() const noexcept { return lower.size(); }
    /// Throws ParameterError unless sizes agree and lower < upper everywhere.
    void validate() const;
    bool contains(std::span<const double> x) const noexcept;
};

/// Reproduction operators, in pool order. The order is also the bandit arm order.
enum class OperatorId : int {
    DeRand1 = 0,
    DeRand2 = 1,
    DeCurrentToRand1 = 2,
    DeCurrentToRand2 = 3,
    UniformMutation = 4,
};

inline constexpr std::size_t kOperatorCount = 5;
inline constexpr std::array<OperatorId, kOperatorCount> kOperatorPool{
    OperatorId::DeRand1, OperatorId::DeRand2, OperatorId::DeCurrentToRand1,
    OperatorId::DeCurrentToRand2, OperatorId::UniformMutation};

/// Canonical upper-case name, e.g. "DE_RAND_1".
std::string_view operator_name(OperatorId op) noexcept;

/// Accepts the canonical name in any case, plus the slash form ("DE/rand/1",
/// "DE/current-to-rand/2", "UM").
std::optional<OperatorId> parse_operator(std::string_view text);

struct OperatorParams {
    double F = 0.5;
    double K = 0.5;
    double um_per_dim_prob = 1.0;
    double pm_eta = 20.0;
    double pm_prob = 1.0;

    /// F = K = 0.5, pm_eta = 20, per-dimension probabilities 1/n.
    static OperatorParams defaults(std::size_t n);
};

/// Random parents needed in addition to the target.
std::size_t parent_count(OperatorId op) noexcept;

/// Clamps every component into [lower_j, upper_j].
Vec repair_bounds(std::span<const double> x, const Bounds& bounds);
void repair_bounds_in_place(Vec& x, const Bounds& bounds) noexcept;

/// Difference-vector formula of a DE variant before bound repair.
/// Throws ParameterError for UniformMutation or a wrong parent count.
Vec de_raw(OperatorId op, std::span<const double> target,
           std::span<const std::span<const double>> parents, double F, double K);

/// x_j + U(0,1) * (u_j - l_j) applied to each dimension with probability
/// `per_dim_prob`, then clamped. Always consumes two draws per dimension.
template <class UniformSource>
Vec uniform_mutation(std::span<const double> target, const Bounds& bounds, double per_dim_prob,
                     UniformSource&& draw) {
    Vec child(target.begin(), target.end());
    for (std::size_t j = 0; j < child.size(); ++j) {
        const double gate = draw();
        const double step = draw();
        if (gate < per_dim_prob) {
            child[j] += step * (bounds.upper[j] - bounds.lower[j]);
        }
    }
    repair_bounds_in_place(child, bounds);
    return child;
}

/// Applies `op` to the target and its random parents and repairs the result.
Vec apply_operator(OperatorId op, std::span<const double> target,
                   std::span<const std::span<const double>> parents, const Bounds& bounds,
                   const OperatorParams& params, Rng& rng);

/// Polynomial mutation (simple form): per dimension with probability
/// pm_prob, x_j += delta * (u_j - l_j) where
/// delta = (2u)^(1/(eta+1)) - 1 for u < 0.5, else 1 - (2(1-u))^(1/(eta+1)).
template <class UniformSource>
Vec polynomial_mutation(std::span<const double> x, const Bounds& bounds,
                        const OperatorParams& params, UniformSource&& draw) {
    Vec child(x.begin(), x.end());
    const double exponent = 1.0 / (params.pm_eta + 1.0);
    for (std::size_t j = 0; j < child.size(); ++j) {
        if (draw() >= params.pm_prob) {
            continue;
        }
        const double u = draw();
        const double delta = u < 0.5 ? std::pow(2.0 * u, exponent) - 1.0
                                     : 1.0 - std::pow(2.0 * (1.0 - u), exponent);
        child[j] += delta * (bounds.upper[j] - bounds.lower[j]);
    }
    repair_bounds_in_place(child, bounds);
    return child;
}

} // namespace dyts
