#pragma once

#include <cstddef>
#include <vector>

#include "dyts/rng.hpp"

namespace dyts {

/// Beta posterior of one arm: pseudo-counts of successes and failures.
struct ArmState {
    double alpha = 1.0;
    double beta = 1.0;

    friend bool operator==(const ArmState&, const ArmState&) = default;
};

/// Beta-Bernoulli bandit over the operator pool.
///
/// `threshold` caps alpha + beta: once an arm's pseudo-count sum reaches it,
/// each update rescales the pair by C / (C + 1) so older rewards decay
/// geometrically. An infinite threshold gives plain Thompson sampling.
struct BanditModel {
    std::vector<ArmState> arms;
    double threshold = 100.0;

    std::size_t size() const noexcept { return arms.size(); }
};

/// k arms with the uniform Beta(1, 1) prior. Throws ParameterError when
/// k == 0 or threshold <= 1.
BanditModel init_model(std::size_t k, double threshold);

/// Dynamic Thompson sampling update of a single arm with a binary reward.
ArmState parameter_update(ArmState arm, int reward, double threshold);

double posterior_mean(const ArmState& arm) noexcept;

/// Draws one Beta sample per arm and returns the argmax (lowest index on ties).
std::size_t select_operator(const BanditModel& model, Rng& rng);

/// Applies parameter_update to arm `index` of the model in place.
void reward_arm(BanditModel& model, std::size_t index, int reward);

} // namespace dyts
