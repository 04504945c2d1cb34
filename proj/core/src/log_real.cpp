#include "emso/log_real.hpp"

#include "emso/error.hpp"

#include <fmt/format.h>

namespace emso {

LogReal LogReal::from_double(long double x) noexcept
{
    LogReal r;
    if (x == 0.0L) {
        return r;
    }
    r.sign_ = x > 0 ? 1 : -1;
    r.log_ = std::log(std::fabs(x));
    return r;
}

LogReal LogReal::from_log(long double log_magnitude, int sign) noexcept
{
    LogReal r;
    if (sign == 0 || log_magnitude == -std::numeric_limits<value_type>::infinity()) {
        return r;
    }
    r.sign_ = sign > 0 ? 1 : -1;
    r.log_ = log_magnitude;
    return r;
}

long double LogReal::value() const noexcept
{
    return sign_ == 0 ? 0.0L : static_cast<long double>(sign_) * std::exp(log_);
}

LogReal LogReal::pow(value_type e) const
{
    if (sign_ < 0) {
        throw InvalidArgument("LogReal::pow needs a non-negative base");
    }
    if (sign_ == 0) {
        return e == 0.0L ? one() : zero();
    }
    return from_log(log_ * e);
}

LogReal operator*(const LogReal& a, const LogReal& b) noexcept
{
    if (a.sign_ == 0 || b.sign_ == 0) {
        return {};
    }
    return LogReal::from_log(a.log_ + b.log_, a.sign_ * b.sign_);
}

LogReal operator/(const LogReal& a, const LogReal& b)
{
    if (b.sign_ == 0) {
        throw InvalidArgument("LogReal division by zero");
    }
    if (a.sign_ == 0) {
        return {};
    }
    return LogReal::from_log(a.log_ - b.log_, a.sign_ * b.sign_);
}

LogReal operator+(const LogReal& a, const LogReal& b) noexcept
{
    if (a.sign_ == 0) {
        return b;
    }
    if (b.sign_ == 0) {
        return a;
    }
    const auto& big = a.log_ >= b.log_ ? a : b;
    const auto& small = a.log_ >= b.log_ ? b : a;
    auto ratio = std::exp(small.log_ - big.log_);
    if (big.sign_ == small.sign_) {
        return LogReal::from_log(big.log_ + std::log1p(ratio), big.sign_);
    }
    if (ratio == 1.0L) {
        return {};
    }
    return LogReal::from_log(big.log_ + std::log1p(-ratio), big.sign_);
}

LogReal operator-(const LogReal& a, const LogReal& b) noexcept
{
    return a + (-b);
}

bool operator==(const LogReal& a, const LogReal& b) noexcept
{
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.log_ == b.log_);
}

std::partial_ordering operator<=>(const LogReal& a, const LogReal& b) noexcept
{
    if (a.sign_ != b.sign_) {
        return a.sign_ <=> b.sign_;
    }
    if (a.sign_ == 0) {
        return std::partial_ordering::equivalent;
    }
    return a.sign_ > 0 ? a.log_ <=> b.log_ : b.log_ <=> a.log_;
}

std::string LogReal::to_string() const
{
    if (sign_ == 0) {
        return "0";
    }
    return fmt::format("{}exp({:.17g})", sign_ < 0 ? "-" : "", static_cast<double>(log_));
}

long double log_factorial(long double n)
{
    if (n < 0) {
        throw InvalidArgument("factorial of a negative number");
    }
    return std::lgamma(n + 1.0L);
}

long double log_binomial(long double n, long double k)
{
    if (k < 0 || k > n) {
        return -std::numeric_limits<long double>::infinity();
    }
    return std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) - std::lgamma(n - k + 1.0L);
}

} // namespace emso
