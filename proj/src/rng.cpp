#include "dyts/rng.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dyts/error.hpp"

namespace dyts {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

} // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) noexcept {
    s_[0] = mix64(seed + kGolden);
    s_[1] = mix64(stream ^ 0x6a09e667f3bcc909ULL);
    s_[2] = mix64(s_[0] ^ rotl(s_[1], 17) ^ 0xbb67ae8584caa73bULL);
    s_[3] = mix64(s_[1] + rotl(s_[0], 41) + 0x3c6ef372fe94f82bULL);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) {
        s_[3] = kGolden;
    }
}

std::uint64_t Rng::next_u64() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open01() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
    // Lemire's nearly-divisionless rejection.
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            x = next_u64();
            m = static_cast<__uint128_t>(x) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double Rng::standard_normal() noexcept {
    // Marsaglia polar method; the spare value is discarded so the number of
    // draws consumed depends only on the rejection loop.
    for (;;) {
        const double u = 2.0 * uniform01() - 1.0;
        const double v = 2.0 * uniform01() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0) || !std::isfinite(shape)) {
        throw ParameterError("gamma shape must be positive, got " + std::to_string(shape));
    }
    if (shape < 1.0) {
        const double boosted = gamma(shape + 1.0);
        return boosted * std::pow(uniform_open01(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = 0.0;
        double v = 0.0;
        do {
            x = standard_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform_open01();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

double Rng::beta(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw ParameterError("beta shape parameters must be positive");
    }
    const double g1 = gamma(alpha);
    const double g2 = gamma(beta);
    const double sum = g1 + g2;
    double value = sum > 0.0 ? g1 / sum : 0.5;
    constexpr double lo = std::numeric_limits<double>::min();
    constexpr double hi = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
    if (value < lo) {
        value = lo;
    } else if (value > hi) {
        value = hi;
    }
    return value;
}

Rng new_rng(std::uint64_t seed, std::uint64_t stream_id) noexcept { return Rng(seed, stream_id); }

double uniform01(Rng& rng) noexcept { return rng.uniform01(); }

double sample_beta(Rng& rng, double alpha, double beta) { return rng.beta(alpha, beta); }

} // namespace dyts
