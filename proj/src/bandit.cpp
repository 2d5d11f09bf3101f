#include "dyts/bandit.hpp"

#include <cmath>
#include <string>

#include "dyts/error.hpp"

namespace dyts {

BanditModel init_model(std::size_t k, double threshold) {
    if (k == 0) {
        throw ParameterError("bandit needs at least one arm");
    }
    if (!(threshold > 1.0)) {
        throw ParameterError("bandit threshold must exceed 1, got " + std::to_string(threshold));
    }
    return BanditModel{std::vector<ArmState>(k), threshold};
}

ArmState parameter_update(ArmState arm, int reward, double threshold) {
    if (reward != 0 && reward != 1) {
        throw ParameterError("reward must be 0 or 1, got " + std::to_string(reward));
    }
    const double r = reward;
    // A rescaled pair can land a rounding error below C; it still counts as
    // pinned so the sum does not jump to C + 1 on the next update.
    if (arm.alpha + arm.beta < threshold * (1.0 - 1e-12)) {
        arm.alpha += r;
        arm.beta += 1.0 - r;
    } else {
        const double scale = threshold / (threshold + 1.0);
        arm.alpha = (arm.alpha + r) * scale;
        arm.beta = (arm.beta + 1.0 - r) * scale;
    }
    return arm;
}

double posterior_mean(const ArmState& arm) noexcept { return arm.alpha / (arm.alpha + arm.beta); }

std::size_t select_operator(const BanditModel& model, Rng& rng) {
    std::size_t best = 0;
    double best_theta = -1.0;
    for (std::size_t i = 0; i < model.arms.size(); ++i) {
        const double theta = rng.beta(model.arms[i].alpha, model.arms[i].beta);
        if (theta > best_theta) {
            best_theta = theta;
            best = i;
        }
    }
    return best;
}

void reward_arm(BanditModel& model, std::size_t index, int reward) {
    if (index >= model.arms.size()) {
        throw ParameterError("arm index out of range");
    }
    model.arms[index] = parameter_update(model.arms[index], reward, model.threshold);
}

} // namespace dyts
