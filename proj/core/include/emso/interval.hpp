#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace emso {

/// Closed real interval [lower, upper] with MPFR endpoints. Every operation
/// rounds the lower endpoint down and the upper endpoint up, so the exact
/// result of the real operation always lies inside. Values are immutable.
class Interval
{
public:
    static constexpr long kMinPrecision = 64;
    static constexpr long kMaxPrecision = 8192;

    /// [0, 0] at the given precision in bits.
    explicit Interval(long precision = kMinPrecision);

    static Interval from_double(double x, long precision);
    static Interval from_uint(std::uint64_t x, long precision);
    /// num / den, enclosed.
    static Interval from_ratio(std::uint64_t num, std::uint64_t den, long precision);
    /// base^exponent, enclosed.
    static Interval pow_uint(std::uint64_t base, std::uint64_t exponent, long precision);

    [[nodiscard]] long precision() const noexcept;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws InvalidArgument when b contains zero.
    friend Interval operator/(const Interval& a, const Interval& b);
    Interval operator-() const;

    /// Natural log; needs lower >= 0 (log 0 = -inf).
    friend Interval log(const Interval& x);
    friend Interval exp(const Interval& x);
    friend Interval log1p(const Interval& x);
    /// [floor(lower), floor(upper)].
    friend Interval floor(const Interval& x);

    /// Every point of *this is < every point of o.
    [[nodiscard]] bool certainly_less(const Interval& o) const;
    [[nodiscard]] bool certainly_less_equal(const Interval& o) const;
    [[nodiscard]] bool is_point() const;

    /// Endpoints rounded outward to double.
    [[nodiscard]] double lower() const;
    [[nodiscard]] double upper() const;
    /// Midpoint as double, for display.
    [[nodiscard]] double mid() const;
    /// The value when the interval is a single integer that fits 64 bits.
    [[nodiscard]] std::optional<std::uint64_t> as_uint() const;

    [[nodiscard]] std::string to_string(int digits = 20) const;

    /// Implementation detail.
    struct Rep;
    explicit Interval(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    [[nodiscard]] const Rep& rep() const noexcept { return *rep_; }

private:
    std::shared_ptr<const Rep> rep_;
};

} // namespace emso
