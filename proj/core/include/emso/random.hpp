#pragma once

#include "emso/graph.hpp"

#include <cstdint>

namespace emso {

/// The SplitMix64 output function: a bijective 64-bit mixer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// Counter-based generator: the k-th output is mix64(key + (k+1)*golden),
/// so any output can be computed without producing the earlier ones.
class CounterRng
{
public:
    explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

    [[nodiscard]] std::uint64_t at(std::uint64_t k) const noexcept { return mix64(key_ + (k + 1) * kGolden); }
    std::uint64_t next() noexcept { return at(counter_++); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return to_unit(next()); }
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) noexcept;

    [[nodiscard]] static double to_unit(std::uint64_t x) noexcept
    {
        return static_cast<double>(x >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Injective in trial for fixed master seed: mix64 is a bijection and
/// master + (trial+1)*golden is injective modulo 2^64.
[[nodiscard]] constexpr std::uint64_t derive_stream(std::uint64_t master_seed, std::uint64_t trial) noexcept
{
    return mix64(master_seed + (trial + 1) * kGolden);
}

struct SamplerConfig
{
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    void validate() const;
};

/// G(n, p): dispatches to geometric skipping when p < 10/n, else to the
/// dense per-pair sampler. Deterministic in the config.
[[nodiscard]] Graph sample_gnp(const SamplerConfig& cfg);
/// One independent draw per unordered pair, keyed by the pair's index.
[[nodiscard]] Graph sample_gnp_dense(const SamplerConfig& cfg);
/// Geometric gaps between successive edges in the pair enumeration.
[[nodiscard]] Graph sample_gnp_skip(const SamplerConfig& cfg);

} // namespace emso
