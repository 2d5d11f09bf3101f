#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dyts/operators.hpp"

namespace dyts {

enum class ProblemId : int {
    UF1, UF2, UF3, UF4, UF5, UF6, UF7, UF8, UF9, UF10,
    WFG1, WFG2, WFG3, WFG4, WFG5, WFG6, WFG7, WFG8, WFG9,
};

inline constexpr std::size_t kProblemCount = 19;

std::string_view problem_name(ProblemId id) noexcept;
/// Case-insensitive ("uf1", "WFG5").
std::optional<ProblemId> parse_problem(std::string_view text);
std::vector<ProblemId> all_problems();

bool is_wfg(ProblemId id) noexcept;

/// A benchmark instance: UF problems use n = 30, WFG problems use
/// k = 18 position and l = 20 distance parameters with two objectives.
class Problem {
public:
    explicit Problem(ProblemId id);

    ProblemId id() const noexcept { return id_; }
    std::string_view name() const noexcept { return problem_name(id_); }
    std::size_t num_variables() const noexcept { return bounds_.size(); }
    std::size_t num_objectives() const noexcept { return m_; }
    const Bounds& bounds() const noexcept { return bounds_; }

    std::size_t wfg_position_params() const noexcept { return wfg_k_; }

    /// Validating evaluation; throws ParameterError on wrong dimension or an
    /// out-of-bounds component.
    Vec evaluate(std::span<const double> x) const;

    /// Hot-path evaluation without checks. `out` must hold m values.
    void evaluate_into(std::span<const double> x, std::span<double> out) const noexcept;

private:
    ProblemId id_;
    std::size_t m_ = 2;
    std::size_t wfg_k_ = 0;
    Bounds bounds_;
};

Bounds problem_bounds(ProblemId id);

/// Points on the analytic Pareto front. Two-objective fronts are sampled on a
/// uniform grid of their natural parameter, split across disconnected
/// segments in proportion to segment length; three-objective fronts use a
/// triangular lattice and return at most `count` points. UF5 always returns
/// its 21 front points.
std::vector<Vec> sample_true_pf(const Problem& problem, std::size_t count);

namespace detail {
void evaluate_uf(int which, std::span<const double> x, std::span<double> f) noexcept;
void evaluate_wfg(int which, std::size_t k, std::span<const double> z, std::span<double> f) noexcept;
/// Front shape of a two-objective WFG problem at position parameter t in [0, 1].
std::array<double, 2> wfg_front_point(int which, double t) noexcept;
} // namespace detail

} // namespace dyts
