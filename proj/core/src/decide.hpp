#pragma once

#include "emso/error.hpp"
#include "emso/interval.hpp"

#include <string>

namespace emso::detail {

/// Thrown inside a computation when an interval comparison cannot be
/// settled at the current precision.
struct Undecided
{
};

inline bool decide_less(const Interval& x, const Interval& y)
{
    if (x.certainly_less(y)) {
        return true;
    }
    if (y.certainly_less_equal(x)) {
        return false;
    }
    throw Undecided{};
}

inline bool decide_less_equal(const Interval& x, const Interval& y)
{
    if (x.certainly_less_equal(y)) {
        return true;
    }
    if (y.certainly_less(x)) {
        return false;
    }
    throw Undecided{};
}

/// Runs fn(precision) at 64, 128, ... bits until it stops throwing Undecided.
template <typename Fn>
auto with_escalation(const std::string& what, Fn fn)
{
    for (long p = Interval::kMinPrecision;; p *= 2) {
        try {
            return fn(p);
        } catch (const Undecided&) {
            if (p >= Interval::kMaxPrecision) {
                throw UndecidableAtPrecision(p, what);
            }
        }
    }
}

/// x^alpha ln x.
inline Interval f_enclosure(const Interval& x, const Interval& alpha)
{
    auto lx = log(x);
    return exp(alpha * lx) * lx;
}

} // namespace emso::detail
