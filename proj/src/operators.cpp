#include "dyts/operators.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "dyts/error.hpp"

namespace dyts {

void Bounds::validate() const {
    if (lower.size() != upper.size() || lower.empty()) {
        throw ParameterError("bounds need matching, non-empty lower and upper vectors");
    }
    for (std::size_t j = 0; j < lower.size(); ++j) {
        if (!(lower[j] < upper[j])) {
            throw ParameterError("bounds require lower < upper in dimension " + std::to_string(j));
        }
    }
}

bool Bounds::contains(std::span<const double> x) const noexcept {
    if (x.size() != lower.size()) {
        return false;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] >= lower[j] && x[j] <= upper[j])) {
            return false;
        }
    }
    return true;
}

std::string_view operator_name(OperatorId op) noexcept {
    switch (op) {
    case OperatorId::DeRand1: return "DE_RAND_1";
    case OperatorId::DeRand2: return "DE_RAND_2";
    case OperatorId::DeCurrentToRand1: return "DE_CTR_1";
    case OperatorId::DeCurrentToRand2: return "DE_CTR_2";
    case OperatorId::UniformMutation: return "UM";
    }
    return "UNKNOWN";
}

std::optional<OperatorId> parse_operator(std::string_view text) {
    std::string key;
    for (char c : text) {
        if (c == '/' || c == '-') {
            key.push_back('_');
        } else {
            key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
    }
    if (key == "DE_RAND_1") return OperatorId::DeRand1;
    if (key == "DE_RAND_2") return OperatorId::DeRand2;
    if (key == "DE_CTR_1" || key == "DE_CURRENT_TO_RAND_1") return OperatorId::DeCurrentToRand1;
    if (key == "DE_CTR_2" || key == "DE_CURRENT_TO_RAND_2") return OperatorId::DeCurrentToRand2;
    if (key == "UM") return OperatorId::UniformMutation;
    return std::nullopt;
}

OperatorParams OperatorParams::defaults(std::size_t n) {
    OperatorParams p;
    const double per_dim = n > 0 ? 1.0 / static_cast<double>(n) : 1.0;
    p.um_per_dim_prob = per_dim;
    p.pm_prob = per_dim;
    return p;
}

std::size_t parent_count(OperatorId op) noexcept {
    switch (op) {
    case OperatorId::DeRand1: return 2;
    case OperatorId::DeRand2: return 4;
    case OperatorId::DeCurrentToRand1: return 3;
    case OperatorId::DeCurrentToRand2: return 5;
    case OperatorId::UniformMutation: return 0;
    }
    return 0;
}

void repair_bounds_in_place(Vec& x, const Bounds& bounds) noexcept {
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = std::clamp(x[j], bounds.lower[j], bounds.upper[j]);
    }
}

Vec repair_bounds(std::span<const double> x, const Bounds& bounds) {
    Vec out(x.begin(), x.end());
    repair_bounds_in_place(out, bounds);
    return out;
}

Vec de_raw(OperatorId op, std::span<const double> target,
           std::span<const std::span<const double>> parents, double F, double K) {
    if (op == OperatorId::UniformMutation) {
        throw ParameterError("uniform mutation has no difference-vector form");
    }
    if (parents.size() != parent_count(op)) {
        throw ParameterError(std::string(operator_name(op)) + " needs " +
                             std::to_string(parent_count(op)) + " parents, got " +
                             std::to_string(parents.size()));
    }
    const std::size_t n = target.size();
    for (const auto& p : parents) {
        if (p.size() != n) {
            throw ParameterError("parent dimension does not match target");
        }
    }
    Vec child(target.begin(), target.end());
    const auto& r = parents;
    for (std::size_t j = 0; j < n; ++j) {
        switch (op) {
        case OperatorId::DeRand1:
            child[j] += F * (r[0][j] - r[1][j]);
            break;
        case OperatorId::DeRand2:
            child[j] += F * (r[0][j] - r[1][j]) + F * (r[2][j] - r[3][j]);
            break;
        case OperatorId::DeCurrentToRand1:
            child[j] += K * (target[j] - r[0][j]) + F * (r[1][j] - r[2][j]);
            break;
        case OperatorId::DeCurrentToRand2:
            child[j] += K * (target[j] - r[0][j]) + F * (r[1][j] - r[2][j]) +
                        F * (r[3][j] - r[4][j]);
            break;
        case OperatorId::UniformMutation:
            break;
        }
    }
    return child;
}

Vec apply_operator(OperatorId op, std::span<const double> target,
                   std::span<const std::span<const double>> parents, const Bounds& bounds,
                   const OperatorParams& params, Rng& rng) {
    if (target.size() != bounds.size()) {
        throw ParameterError("target dimension does not match bounds");
    }
    if (op == OperatorId::UniformMutation) {
        if (!parents.empty()) {
            throw ParameterError("UM takes no random parents");
        }
        return uniform_mutation(target, bounds, params.um_per_dim_prob, rng);
    }
    Vec child = de_raw(op, target, parents, params.F, params.K);
    repair_bounds_in_place(child, bounds);
    return child;
}

} // namespace dyts
