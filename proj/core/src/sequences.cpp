#include "decide.hpp"

#include "emso/analytics.hpp"
#include "emso/error.hpp"
#include "emso/witness.hpp"

#include <cmath>
#include <functional>

namespace emso {

using detail::decide_less;
using detail::decide_less_equal;
using detail::f_enclosure;
using detail::with_escalation;

namespace {

constexpr std::uint64_t kTermLimit = std::uint64_t{1} << 62;

Interval num(double x, long prec)
{
    return Interval::from_double(x, prec);
}

Interval num(std::uint64_t x, long prec)
{
    return Interval::from_uint(x, prec);
}

Interval k_enclosure(std::size_t gamma, double alpha, long prec)
{
    auto g1 = num(std::uint64_t{gamma + 1}, prec);
    auto g2 = num(std::uint64_t{gamma + 2}, prec);
    return num(2.0, prec) * (num(1.0, prec) - g2 * num(alpha, prec) / g1);
}

/// omega_r(t) as an interval, exact when the precision allows.
Interval omega_enclosure(std::size_t r, std::uint64_t t, long prec)
{
    return (Interval::pow_uint(r, t, prec) - num(1.0, prec)) / num(std::uint64_t{r - 1}, prec);
}

/// a + (gamma+1) omega_r(a).
Interval s_enclosure(std::size_t a, std::size_t gamma, std::size_t r, long prec)
{
    return num(std::uint64_t{a}, prec) + num(std::uint64_t{gamma + 1}, prec) * omega_enclosure(r, a, prec);
}

/// a + 2(gamma+1) omega_r(a) + (gamma+1) omega_r(omega_r(a)).
Interval v_enclosure(std::size_t a, std::size_t gamma, std::size_t r, long prec)
{
    const std::uint64_t w = omega(r, a);
    auto g1 = num(std::uint64_t{gamma + 1}, prec);
    return num(std::uint64_t{a}, prec) + num(2.0, prec) * g1 * num(w, prec) + g1 * omega_enclosure(r, w, prec);
}

struct Scan
{
    std::vector<std::size_t> inside;
    std::vector<std::size_t> below;
    std::vector<std::size_t> above;
};

/// Classifies a = 1, 2, ... against the window until the (increasing) size
/// passes the upper end.
Scan scan_window(const std::function<Interval(std::size_t)>& size, const Interval& low, const Interval& high,
                 bool low_inclusive, bool high_inclusive)
{
    Scan out;
    for (std::size_t a = 1;; ++a) {
        auto s = size(a);
        bool under_high = high_inclusive ? decide_less_equal(s, high) : decide_less(s, high);
        if (!under_high) {
            out.above.push_back(a);
            return out;
        }
        bool over_low = low_inclusive ? decide_less_equal(low, s) : decide_less(low, s);
        (over_low ? out.inside : out.below).push_back(a);
    }
}

/// floor(y) for the y >= 1 with f(y) = target, starting from a guess.
std::uint64_t exact_floor(const Interval& target, const Interval& alpha, std::uint64_t guess, long prec)
{
    std::uint64_t m = std::max<std::uint64_t>(guess, 1);
    for (int step = 0; step < 100000; ++step) {
        if (m >= kTermLimit) {
            throw InvalidArgument("sequence term exceeds the supported 62-bit range");
        }
        auto fm = f_enclosure(num(m, prec), alpha);
        if (m > 1 && decide_less(target, fm)) {
            --m;
            continue;
        }
        auto fm1 = f_enclosure(num(m + 1, prec), alpha);
        if (decide_less_equal(fm1, target)) {
            ++m;
            continue;
        }
        return m;
    }
    throw InvariantViolation("floor search for a sequence term did not settle");
}

std::uint64_t guess_floor(double target, double alpha)
{
    double y = inverse_f(target, alpha);
    if (!(y < static_cast<double>(kTermLimit))) {
        throw InvalidArgument("sequence term exceeds the supported 62-bit range");
    }
    return static_cast<std::uint64_t>(std::floor(y));
}

} // namespace

Part1Row sequence_part1(std::size_t i, double alpha, std::size_t gamma, const Part1Constants& k)
{
    if (i < 1) {
        throw InvalidArgument("sequence index must be at least 1");
    }
    if (auto why = part1_inadmissibility(alpha, gamma, k)) {
        throw InvalidArgument("inadmissible part-1 parameters: " + *why);
    }
    const double kd = k_gamma(gamma, alpha);
    const double tm = std::pow(4.0, static_cast<double>(i)) / (9.0 * (1.0 - alpha));
    const double tn = static_cast<double>(s_value(i, gamma, 4)) / (k.C * kd);
    const std::uint64_t gm = guess_floor(tm, alpha);
    const std::uint64_t gn = guess_floor(tn, alpha);

    return with_escalation("part-1 certificate", [&](long prec) {
        Part1Row row;
        row.i = i;
        row.precision_bits = prec;
        auto a = num(alpha, prec);
        auto kk = k_enclosure(gamma, alpha, prec);
        auto target_m = Interval::pow_uint(4, i, prec) / (num(9.0, prec) * (num(1.0, prec) - a));
        auto target_n = s_enclosure(i, gamma, 4, prec) / (num(k.C, prec) * kk);
        row.m = exact_floor(target_m, a, gm, prec);
        row.n = exact_floor(target_n, a, gn, prec);

        auto fm = f_enclosure(num(row.m, prec), a);
        auto fn = f_enclosure(num(row.n, prec), a);
        row.f_m = fm.mid();
        row.f_n = fn.mid();
        auto size = [&](std::size_t aa) { return s_enclosure(aa, gamma, 4, prec); };

        auto gap_low = num(k.c, prec) * kk * fm;
        auto gap_high = kk * fm + num(k.epsilon, prec);
        row.gap_low = gap_low.mid();
        row.gap_high = gap_high.mid();
        row.gap_hits = scan_window(size, gap_low, gap_high, false, false).inside;
        row.gap_certificate = row.gap_hits.empty();

        auto ex_low = num(k.C1, prec) * kk * fn;
        auto ex_high = num(k.C2, prec) * kk * fn;
        row.exist_low = ex_low.mid();
        row.exist_high = ex_high.mid();
        row.exist_hits = scan_window(size, ex_low, ex_high, true, true).inside;
        row.exist_certificate = !row.exist_hits.empty();
        return row;
    });
}

namespace {

Part2Term part2_term(std::size_t t, bool want_even, const Part2Params& p, long prec)
{
    Part2Term term;
    term.tower_index = t;
    const std::uint64_t w = omega(p.r, t);
    auto g1 = num(std::uint64_t{p.gamma + 1}, prec);
    auto bracket = g1 * omega_enclosure(p.r, w, prec);
    auto log_bracket = log(bracket);
    term.log_bracket = log_bracket.mid();

    auto beta = num(p.beta, prec);
    auto alpha = num(p.alpha, prec);
    auto value = num(2.0, prec) * floor(exp(log_bracket / beta));
    auto log_value = log(value);
    term.value = LogReal::from_log(log_value.mid());
    term.log_value_low = log_value.lower();
    term.log_value_high = log_value.upper();
    term.exact = value.as_uint();

    auto power = exp(beta * log_value);
    auto bound = k_enclosure(p.gamma, p.alpha, prec) * exp(alpha * log_value) * log_value + num(p.epsilon, prec);

    std::size_t a = 1;
    while (decide_less_equal(v_enclosure(a, p.gamma, p.r, prec), power)) {
        term.floor_a = a;
        ++a;
    }
    if (term.floor_a) {
        term.parity_ok = (*term.floor_a % 2 == 0) == want_even;
        term.upper_ok = decide_less(bound, v_enclosure(*term.floor_a + 1, p.gamma, p.r, prec));
    }
    term.certificate = term.floor_a && term.parity_ok && term.upper_ok;
    return term;
}

} // namespace

Part2Row sequence_part2(std::size_t i, const Part2Params& p)
{
    if (i < 1) {
        throw InvalidArgument("sequence index must be at least 1");
    }
    if (auto why = part2_inadmissibility(p)) {
        throw InvalidArgument("inadmissible part-2 parameters: " + *why);
    }
    return with_escalation("part-2 certificate", [&](long prec) {
        Part2Row row;
        row.i = i;
        row.precision_bits = prec;
        row.n = part2_term(2 * i, true, p, prec);
        row.m = part2_term(2 * i + 1, false, p, prec);
        return row;
    });
}

ThresholdReport window_report(std::uint64_t n, double alpha, std::size_t gamma, std::size_t r, WindowMode mode,
                              const ThresholdParams& params)
{
    if (n < 1) {
        throw InvalidArgument("n must be at least 1");
    }
    if (r < 2) {
        throw InvalidArgument("r must be at least 2");
    }
    const double kd = k_gamma(gamma, alpha);
    if (!(kd > 0.0)) {
        throw InvalidArgument("k_gamma must be positive (alpha < (gamma+1)/(gamma+2))");
    }
    ThresholdReport rep;
    rep.mode = mode;
    rep.kind = params.kind;
    rep.n = n;
    rep.alpha = alpha;
    rep.gamma = gamma;
    rep.r = r;
    rep.k_gamma = kd;
    rep.f_n = f(static_cast<double>(n), alpha);

    const auto constants = params.constants.value_or(Part1Constants{});
    const auto k1 = mode == WindowMode::Part1 && !params.constants ? Part1Constants::defaults(alpha, gamma)
                                                                    : constants;
    Part2Params p2{alpha, params.beta, gamma, r, params.epsilon};
    if (mode == WindowMode::Part1) {
        rep.parameters_admissible = !part1_inadmissibility(alpha, gamma, k1);
        rep.low_inclusive = rep.high_inclusive = params.kind == WindowKind::Narrow;
    } else {
        rep.parameters_admissible = !part2_inadmissibility(p2);
        rep.kind = WindowKind::Wide;
    }

    return with_escalation("window membership", [&](long prec) {
        ThresholdReport out = rep;
        out.precision_bits = prec;
        auto a = num(alpha, prec);
        auto kk = k_enclosure(gamma, alpha, prec);
        auto fn = f_enclosure(num(n, prec), a);
        Interval low(prec);
        Interval high(prec);
        std::function<Interval(std::size_t)> size;
        if (mode == WindowMode::Part1) {
            if (params.kind == WindowKind::Wide) {
                low = num(k1.c, prec) * kk * fn;
                high = kk * fn + num(k1.epsilon, prec);
            } else {
                low = num(k1.C1, prec) * kk * fn;
                high = num(k1.C2, prec) * kk * fn;
            }
            size = [&](std::size_t aa) { return s_enclosure(aa, gamma, r, prec); };
        } else {
            low = exp(num(params.beta, prec) * log(num(n, prec)));
            high = kk * fn + num(params.epsilon, prec);
            size = [&](std::size_t aa) { return v_enclosure(aa, gamma, r, prec); };
        }
        out.window_low = low.mid();
        out.window_high = high.mid();
        auto scan = scan_window(size, low, high, out.low_inclusive, out.high_inclusive);
        out.admissible_a = scan.inside;
        out.outside_a = scan.below;
        out.outside_a.insert(out.outside_a.end(), scan.above.begin(), scan.above.end());
        out.gap = out.admissible_a.empty();
        if (mode == WindowMode::Part2) {
            for (std::size_t aa = 1; decide_less_equal(size(aa), low); ++aa) {
                out.floor_a = aa;
            }
        }
        return out;
    });
}

} // namespace emso
