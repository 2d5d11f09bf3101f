#pragma once

#include <array>
#include <cstdint>

namespace dyts {

/// Seedable xoshiro256** generator.
///
/// The 256-bit state is derived from a (seed, stream) pair through the
/// splitmix64 finalizer, which is a bijection on 64-bit words; the first two
/// state words are the finalized seed and the finalized stream id, so distinct
/// pairs always start from distinct states. Output is identical on every
/// platform since nothing depends on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0, std::uint64_t stream = 0) noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform draw on [0, 1) with 53 bits of resolution.
    double uniform01() noexcept;

    /// Uniform draw on the open interval (0, 1).
    double uniform_open01() noexcept;

    /// Uniform integer in [0, bound). Requires bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept;

    double standard_normal() noexcept;

    /// Gamma(shape, 1) by the Marsaglia-Tsang squeeze method.
    double gamma(double shape);

    /// Beta(alpha, beta) as G1 / (G1 + G2); the result lies strictly in (0, 1).
    double beta(double alpha, double beta);

    // Lets an Rng stand in wherever a callable uniform source is expected.
    double operator()() noexcept { return uniform01(); }

    const std::array<std::uint64_t, 4>& state() const noexcept { return s_; }

private:
    std::array<std::uint64_t, 4> s_{};
};

/// splitmix64 finalizer; bijective avalanche hash.
std::uint64_t mix64(std::uint64_t x) noexcept;

Rng new_rng(std::uint64_t seed, std::uint64_t stream_id) noexcept;
double uniform01(Rng& rng) noexcept;
double sample_beta(Rng& rng, double alpha, double beta);

} // namespace dyts
