#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace emso {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an argument violates a documented precondition.
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// Raised when a search exhausts its node-expansion cap.
class BudgetExceeded : public Error
{
public:
    explicit BudgetExceeded(std::uint64_t expansions)
        : Error("search budget exceeded after " + std::to_string(expansions) + " expansions"),
          expansions_(expansions)
    {
    }

    [[nodiscard]] std::uint64_t expansions() const noexcept { return expansions_; }

private:
    std::uint64_t expansions_;
};

/// Raised when a structural invariant of an evolving object is broken.
class InvariantViolation : public Error
{
public:
    using Error::Error;
};

/// Raised when interval arithmetic cannot settle a comparison even at the
/// largest working precision.
class UndecidableAtPrecision : public Error
{
public:
    explicit UndecidableAtPrecision(long bits, const std::string& what)
        : Error(what + " is undecidable at " + std::to_string(bits) + " bits"), bits_(bits)
    {
    }

    [[nodiscard]] long bits() const noexcept { return bits_; }

private:
    long bits_;
};

} // namespace emso
