#pragma once

#include <cstddef>
#include <cstdint>

namespace emso {

inline constexpr double kZ95 = 1.959963984540054;

struct ProportionEstimate
{
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
};

/// Point estimate with the Wilson score interval. trials = 0 yields the
/// uninformative interval [0, 1].
[[nodiscard]] ProportionEstimate wilson_estimate(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

/// Welford accumulator for sample mean and variance.
class RunningStats
{
public:
    void add(double x) noexcept;

    [[nodiscard]] std::size_t count() const noexcept { return n_; }
    [[nodiscard]] double mean() const noexcept { return mean_; }
    /// Unbiased sample variance (0 for fewer than two samples).
    [[nodiscard]] double variance() const noexcept;
    [[nodiscard]] double sd() const noexcept;
    /// Standard error of the mean.
    [[nodiscard]] double se() const noexcept;

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

} // namespace emso
