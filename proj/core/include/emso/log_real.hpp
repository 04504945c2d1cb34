#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <string>

namespace emso {

/// A real number stored as sign and natural log of its magnitude.
/// Products and powers are exact in the log domain; sums use log-sum-exp.
class LogReal
{
public:
    using value_type = long double;

    /// Zero.
    constexpr LogReal() noexcept = default;

    static LogReal from_double(long double x) noexcept;
    /// sign * exp(log_magnitude); sign 0 gives zero.
    static LogReal from_log(long double log_magnitude, int sign = 1) noexcept;
    static constexpr LogReal zero() noexcept { return {}; }
    static LogReal one() noexcept { return from_log(0.0L); }

    [[nodiscard]] int sign() const noexcept { return sign_; }
    [[nodiscard]] bool is_zero() const noexcept { return sign_ == 0; }
    /// ln|x|; -infinity for zero.
    [[nodiscard]] value_type log_abs() const noexcept
    {
        return sign_ == 0 ? -std::numeric_limits<value_type>::infinity() : log_;
    }
    /// May overflow to +-infinity or underflow to zero.
    [[nodiscard]] long double value() const noexcept;

    /// x^e for x >= 0; 0^0 = 1.
    [[nodiscard]] LogReal pow(value_type e) const;

    friend LogReal operator*(const LogReal& a, const LogReal& b) noexcept;
    friend LogReal operator/(const LogReal& a, const LogReal& b);
    friend LogReal operator+(const LogReal& a, const LogReal& b) noexcept;
    friend LogReal operator-(const LogReal& a, const LogReal& b) noexcept;
    LogReal operator-() const noexcept
    {
        LogReal r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    LogReal& operator*=(const LogReal& b) noexcept { return *this = *this * b; }
    LogReal& operator+=(const LogReal& b) noexcept { return *this = *this + b; }

    friend bool operator==(const LogReal& a, const LogReal& b) noexcept;
    friend std::partial_ordering operator<=>(const LogReal& a, const LogReal& b) noexcept;

    /// "0", or "[-]exp(<log>)" with the log magnitude in full precision.
    [[nodiscard]] std::string to_string() const;

private:
    int sign_ = 0;
    value_type log_ = 0.0L;
};

/// ln C(n, k) and ln n! through lgamma.
[[nodiscard]] long double log_binomial(long double n, long double k);
[[nodiscard]] long double log_factorial(long double n);

} // namespace emso
