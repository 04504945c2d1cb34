#include "emso/stats.hpp"

#include "emso/error.hpp"

#include <algorithm>
#include <cmath>

namespace emso {

ProportionEstimate wilson_estimate(std::uint64_t successes, std::uint64_t trials, double z)
{
    if (successes > trials) {
        throw InvalidArgument("successes exceed trials");
    }
    ProportionEstimate e{successes, trials, 0.0, 0.0, 1.0};
    if (trials == 0) {
        return e;
    }
    auto n = static_cast<double>(trials);
    auto p = static_cast<double>(successes) / n;
    auto z2 = z * z;
    auto denom = 1.0 + z2 / n;
    auto centre = (p + z2 / (2.0 * n)) / denom;
    auto half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    e.p_hat = p;
    e.ci_low = successes == 0 ? 0.0 : std::max(0.0, centre - half);
    e.ci_high = successes == trials ? 1.0 : std::min(1.0, centre + half);
    return e;
}

void RunningStats::add(double x) noexcept
{
    ++n_;
    auto delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
}

double RunningStats::variance() const noexcept
{
    return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1);
}

double RunningStats::sd() const noexcept
{
    return std::sqrt(variance());
}

double RunningStats::se() const noexcept
{
    return n_ == 0 ? 0.0 : sd() / std::sqrt(static_cast<double>(n_));
}

} // namespace emso
