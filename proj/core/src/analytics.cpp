#include "emso/analytics.hpp"

#include "emso/error.hpp"
#include "emso/witness.hpp"

#include <cmath>
#include <limits>

namespace emso {

namespace {

void check_alpha(double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidArgument("alpha must lie in (0, 1)");
    }
}

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument("edge probability must lie in [0, 1]");
    }
}

long double f_long(long double x, long double alpha)
{
    return std::pow(x, alpha) * std::log(x);
}

long double log_r_factorial(std::size_t r)
{
    return log_factorial(static_cast<long double>(r));
}

/// ln [C(n,s) s! p^E (1-p)^{C(s,2)-E}], or empty for zero.
std::optional<long double> log_labeled_placements(std::uint64_t n, double p, std::uint64_t s, std::uint64_t e)
{
    if (s > n) {
        throw InvalidArgument("pattern with " + std::to_string(s) + " vertices does not fit in n = " +
                              std::to_string(n));
    }
    check_probability(p);
    const long double pairs = static_cast<long double>(s) * static_cast<long double>(s - 1) / 2.0L;
    const long double non_edges = pairs - static_cast<long double>(e);
    long double out = std::lgamma(static_cast<long double>(n) + 1.0L) -
                      std::lgamma(static_cast<long double>(n - s) + 1.0L);
    if (e > 0) {
        if (p == 0.0) {
            return std::nullopt;
        }
        out += static_cast<long double>(e) * std::log(static_cast<long double>(p));
    }
    if (non_edges > 0) {
        if (p == 1.0) {
            return std::nullopt;
        }
        out += non_edges * std::log1p(-static_cast<long double>(p));
    }
    return out;
}

} // namespace

double k_gamma(std::size_t gamma, double alpha)
{
    check_alpha(alpha);
    const double g = static_cast<double>(gamma);
    return 2.0 * (1.0 - (g + 2.0) / (g + 1.0) * alpha);
}

double f(double x, double alpha)
{
    if (!(x >= 1.0)) {
        throw InvalidArgument("f needs x >= 1");
    }
    return static_cast<double>(f_long(x, alpha));
}

double inverse_f(double target, double alpha)
{
    if (!(target >= 0.0) || std::isinf(target)) {
        throw InvalidArgument("inverse_f needs a finite target >= 0");
    }
    check_alpha(alpha);
    if (target == 0.0) {
        return 1.0;
    }
    long double lo = 1.0L;
    long double hi = 2.0L;
    while (f_long(hi, alpha) < target) {
        lo = hi;
        hi *= 2.0L;
    }
    for (int it = 0; it < 400 && hi - lo > 1e-13L * hi; ++it) {
        long double mid = lo + (hi - lo) / 2.0L;
        (f_long(mid, alpha) < target ? lo : hi) = mid;
    }
    return static_cast<double>(lo + (hi - lo) / 2.0L);
}

double edge_probability(double n, double alpha)
{
    if (!(n >= 1.0)) {
        throw InvalidArgument("n must be at least 1");
    }
    check_alpha(alpha);
    return std::pow(n, -alpha);
}

std::uint64_t s_value(std::size_t a, std::size_t gamma, std::size_t r)
{
    return w_vertex_count({a, gamma, r});
}

std::uint64_t expected_W_divisor_exponent(std::size_t a, std::size_t r)
{
    WitnessParams{a, 0, r}.validate();
    return omega(r, a - 1);
}

std::uint64_t expected_W_star_divisor_exponent(std::size_t a, std::size_t r)
{
    WitnessParams{a, 0, r}.validate();
    auto w = omega(r, a);
    auto ww = omega_checked(r, w);
    if (ww && (*ww - 1) % r != 0) {
        throw InvalidArgument("divisor exponent of expected_W_star is not integral");
    }
    // (omega(w) - 1)/r = omega(w - 1)
    return omega(r, w - 1);
}

LogReal expected_W(std::uint64_t n, double p, std::size_t a, std::size_t gamma, std::size_t r)
{
    WitnessParams wp{a, gamma, r};
    auto s = w_vertex_count(wp);
    auto e = w_edge_count(wp);
    auto base = log_labeled_placements(n, p, s, e);
    if (!base) {
        return LogReal::zero();
    }
    auto d = static_cast<long double>(expected_W_divisor_exponent(a, r));
    return LogReal::from_log(*base - d * log_r_factorial(r));
}

LogReal expected_W_dominating(std::uint64_t n, double p, std::size_t a, std::size_t gamma, std::size_t r)
{
    auto base = expected_W(n, p, a, gamma, r);
    auto s = s_value(a, gamma, r);
    if (base.is_zero() || s == n) {
        return base;
    }
    // (1 - (1-p)^s)^{n-s}
    const long double miss = static_cast<long double>(s) * std::log1p(-static_cast<long double>(p));
    const long double q = std::exp(miss);
    if (q >= 1.0L) {
        return LogReal::zero();
    }
    return base * LogReal::from_log(static_cast<long double>(n - s) * std::log1p(-q));
}

LogReal expected_W_star(std::uint64_t n, double p, std::size_t a, std::size_t gamma, std::size_t r)
{
    WitnessParams wp{a, gamma, r};
    wp.validate();
    auto s = w_star_vertex_count(wp);
    auto e = w_star_edge_count(wp);
    if (!s || !e) {
        throw InvalidArgument("W* is larger than n");
    }
    auto base = log_labeled_placements(n, p, *s, *e);
    if (!base) {
        return LogReal::zero();
    }
    auto d = static_cast<long double>(expected_W_star_divisor_exponent(a, r));
    return LogReal::from_log(*base - d * log_r_factorial(r));
}

double domination_probability(std::uint64_t n, double p, std::uint64_t k)
{
    if (k > n) {
        throw InvalidArgument("k must not exceed n");
    }
    check_probability(p);
    const double q = std::pow(1.0 - p, static_cast<double>(k));
    return std::pow(1.0 - q, static_cast<double>(n - k));
}

Part1Constants Part1Constants::defaults(double alpha, std::size_t gamma)
{
    const double k = k_gamma(gamma, alpha);
    if (!(k > 0.0)) {
        throw InvalidArgument("k_gamma must be positive");
    }
    Part1Constants out;
    const double bound = (1.0 - alpha) / k;
    out.C1 = bound + 0.05;
    out.C2 = 0.95;
    out.C = (out.C1 + out.C2) / 2.0;
    out.c = 0.8 * bound;
    out.epsilon = 1.0;
    return out;
}

std::optional<std::string> part1_inadmissibility(double alpha, std::size_t gamma, const Part1Constants& k)
{
    if (!(alpha > 0.0 && alpha < 0.5)) {
        return "alpha must lie in (0, 1/2)";
    }
    const double g = static_cast<double>(gamma);
    if (!(g > 9.0) || !(g > (3.0 * alpha - 1.0) / (1.0 - 2.0 * alpha))) {
        return "gamma must exceed max{9, (3 alpha - 1)/(1 - 2 alpha)}";
    }
    const double bound = (1.0 - alpha) / k_gamma(gamma, alpha);
    if (!(bound < k.C1 && k.C1 < k.C && k.C < k.C2 && k.C2 < 1.0)) {
        return "need (1-alpha)/k_gamma < C1 < C < C2 < 1";
    }
    if (!(k.c > 0.0 && k.c < bound)) {
        return "need 0 < c < (1-alpha)/k_gamma";
    }
    if (!(k.epsilon > 0.0)) {
        return "epsilon must be positive";
    }
    return std::nullopt;
}

std::optional<std::string> part2_inadmissibility(const Part2Params& p)
{
    if (!(p.alpha > 0.0 && p.alpha < 1.0)) {
        return "alpha must lie in (0, 1)";
    }
    if (!(p.beta > 0.0 && p.beta < p.alpha && p.beta < 2.0 * (1.0 - p.alpha) / 3.0)) {
        return "beta must lie in (0, min{alpha, 2(1-alpha)/3})";
    }
    if (p.r < 2) {
        return "r must be at least 2";
    }
    const double g = static_cast<double>(p.gamma);
    // Conditions on gamma: connector paths avoid small sets, copies of
    // W* with |V| <= n^beta exist.
    if (!((g + 1.0) / (g + 3.0) > p.alpha)) {
        return "need (gamma+1)/(gamma+3) > alpha";
    }
    if (!(g > (p.beta + 2.0 * p.alpha - 1.0) / (1.0 - p.alpha))) {
        return "need gamma > (beta + 2 alpha - 1)/(1 - alpha)";
    }
    if (!(g + 1.0 > 3.0 * p.alpha / (1.0 - p.alpha))) {
        return "need gamma + 1 > 3 alpha/(1 - alpha)";
    }
    if (!(p.epsilon > 0.0)) {
        return "epsilon must be positive";
    }
    return std::nullopt;
}

std::string window_mode_name(WindowMode m)
{
    return m == WindowMode::Part1 ? "part1" : "part2";
}

WindowMode parse_window_mode(const std::string& s)
{
    if (s == "part1") {
        return WindowMode::Part1;
    }
    if (s == "part2") {
        return WindowMode::Part2;
    }
    throw InvalidArgument("unknown mode '" + s + "' (expected part1 or part2)");
}

std::string window_kind_name(WindowKind k)
{
    return k == WindowKind::Wide ? "wide" : "narrow";
}

WindowKind parse_window_kind(const std::string& s)
{
    if (s == "wide") {
        return WindowKind::Wide;
    }
    if (s == "narrow") {
        return WindowKind::Narrow;
    }
    throw InvalidArgument("unknown window '" + s + "' (expected wide or narrow)");
}

} // namespace emso
