#pragma once

#include "emso/log_real.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace emso {

/// 2(1 - (gamma+2) alpha / (gamma+1)).
[[nodiscard]] double k_gamma(std::size_t gamma, double alpha);

/// x^alpha ln x, for x >= 1.
[[nodiscard]] double f(double x, double alpha);
/// The x >= 1 with f(x) = target, by bisection to relative tolerance 1e-12.
[[nodiscard]] double inverse_f(double target, double alpha);

/// n^{-alpha}.
[[nodiscard]] double edge_probability(double n, double alpha);

/// s(a) = a + (gamma+1) omega_r(a), the vertex count of W_a^gamma.
[[nodiscard]] std::uint64_t s_value(std::size_t a, std::size_t gamma, std::size_t r = 4);

/// Exponent of r! in the divisor of expected_W: omega_r(a-1).
[[nodiscard]] std::uint64_t expected_W_divisor_exponent(std::size_t a, std::size_t r = 4);
/// Exponent of r! in the divisor of expected_W_star:
/// (omega_r(omega_r(a)) - 1)/r.
[[nodiscard]] std::uint64_t expected_W_star_divisor_exponent(std::size_t a, std::size_t r);

/// C(n,s) s! / (r!)^{omega_r(a-1)} p^E (1-p)^{C(s,2)-E} with s, E the vertex
/// and edge counts of W_a^gamma. Throws InvalidArgument when s > n.
[[nodiscard]] LogReal expected_W(std::uint64_t n, double p, std::size_t a, std::size_t gamma,
                                 std::size_t r = 4);
/// expected_W times (1 - (1-p)^s)^{n-s}.
[[nodiscard]] LogReal expected_W_dominating(std::uint64_t n, double p, std::size_t a, std::size_t gamma,
                                            std::size_t r = 4);
/// The same count for W*_a with s = V_{gamma,r}(a), E = E_{gamma,r}(a).
[[nodiscard]] LogReal expected_W_star(std::uint64_t n, double p, std::size_t a, std::size_t gamma,
                                      std::size_t r);

/// Probability that a fixed k-set dominates G(n,p): (1-(1-p)^k)^{n-k}.
[[nodiscard]] double domination_probability(std::uint64_t n, double p, std::uint64_t k);

struct Part1Constants
{
    double C1 = 0;
    double C2 = 0;
    double C = 0;
    double c = 0;
    double epsilon = 1.0;

    /// C1 = (1-alpha)/k + 0.05, C2 = 0.95, C = (C1+C2)/2,
    /// c = (4/5)(1-alpha)/k, epsilon = 1. Throws when k_gamma <= 0.
    static Part1Constants defaults(double alpha, std::size_t gamma);
};

/// Reason the part-1 parameters are inadmissible, or empty.
[[nodiscard]] std::optional<std::string> part1_inadmissibility(double alpha, std::size_t gamma,
                                                               const Part1Constants& k);

struct Part1Row
{
    std::size_t i = 0;
    /// m_i = floor(y_i) with f(y_i) = 4^i / (9(1-alpha)).
    std::uint64_t m = 0;
    /// n_i = floor(x_i) with f(x_i) = s(i) / (C k_gamma).
    std::uint64_t n = 0;
    double f_m = 0;
    double f_n = 0;
    /// (c k f(m), k f(m) + epsilon), enclosure midpoints.
    double gap_low = 0;
    double gap_high = 0;
    /// [C1 k f(n), C2 k f(n)].
    double exist_low = 0;
    double exist_high = 0;
    /// a with s(a) in the open gap window; the gap certificate needs none.
    std::vector<std::size_t> gap_hits;
    /// a with s(a) in the closed existence window; needs at least one.
    std::vector<std::size_t> exist_hits;
    bool gap_certificate = false;
    bool exist_certificate = false;
    long precision_bits = 0;
};

/// Throws InvalidArgument on inadmissible parameters or when a term leaves
/// 64 bits, and UndecidableAtPrecision if a decision needs more than
/// Interval::kMaxPrecision bits.
[[nodiscard]] Part1Row sequence_part1(std::size_t i, double alpha, std::size_t gamma, const Part1Constants& k);

struct Part2Params
{
    double alpha = 0.6;
    double beta = 0.25;
    std::size_t gamma = 4;
    std::size_t r = 2;
    double epsilon = 1.0;
};

/// Reason the part-2 parameters are inadmissible, or empty.
[[nodiscard]] std::optional<std::string> part2_inadmissibility(const Part2Params& p);

struct Part2Term
{
    /// 2i for n_i, 2i+1 for m_i.
    std::size_t tower_index = 0;
    /// ln of (gamma+1)(r^{omega_r(t)} - 1)/(r - 1).
    double log_bracket = 0;
    /// The term 2 floor(bracket^{1/beta}) and an enclosure of its log.
    LogReal value;
    double log_value_low = 0;
    double log_value_high = 0;
    /// Set when the term is pinned down exactly and fits 64 bits.
    std::optional<std::uint64_t> exact;
    /// Largest a with V(a) <= value^beta.
    std::optional<std::size_t> floor_a;
    bool parity_ok = false;
    /// V(floor_a + 1) > k_gamma value^alpha ln value + epsilon.
    bool upper_ok = false;
    bool certificate = false;
};

struct Part2Row
{
    std::size_t i = 0;
    Part2Term n;
    Part2Term m;
    long precision_bits = 0;
};

/// Throws InvalidArgument on inadmissible parameters.
[[nodiscard]] Part2Row sequence_part2(std::size_t i, const Part2Params& p);

enum class WindowMode { Part1, Part2 };
enum class WindowKind {
    /// (c k f(n), k f(n) + epsilon): a gap here rules out dominating copies.
    Wide,
    /// [C1 k f(n), C2 k f(n)]: a hit here yields dominating copies.
    Narrow,
};

[[nodiscard]] std::string window_mode_name(WindowMode m);
[[nodiscard]] WindowMode parse_window_mode(const std::string& s);
[[nodiscard]] std::string window_kind_name(WindowKind k);
[[nodiscard]] WindowKind parse_window_kind(const std::string& s);

struct ThresholdParams
{
    WindowKind kind = WindowKind::Wide;
    /// Part-1 constants; defaults when empty.
    std::optional<Part1Constants> constants;
    /// Part 2 only.
    double beta = 0.25;
    double epsilon = 1.0;
};

struct ThresholdReport
{
    WindowMode mode = WindowMode::Part1;
    WindowKind kind = WindowKind::Wide;
    std::uint64_t n = 0;
    double alpha = 0;
    std::size_t gamma = 0;
    std::size_t r = 4;
    double k_gamma = 0;
    double f_n = 0;
    double window_low = 0;
    double window_high = 0;
    bool low_inclusive = false;
    bool high_inclusive = false;
    /// Sizes are s(a) in part 1 and V_{gamma,r}(a) in part 2.
    std::vector<std::size_t> admissible_a;
    std::vector<std::size_t> outside_a;
    /// No admissible a.
    bool gap = false;
    bool parameters_admissible = false;
    /// Part 2: largest a with V(a) <= n^beta.
    std::optional<std::size_t> floor_a;
    long precision_bits = 0;
};

/// Part 1 windows are as in WindowKind over s(a). Part 2 uses the open
/// window (n^beta, k f(n) + epsilon) over V_{gamma,r}(a): a inside is
/// covered by neither the existence nor the absence bound. Throws
/// InvalidArgument when k_gamma <= 0 or n < 1.
[[nodiscard]] ThresholdReport window_report(std::uint64_t n, double alpha, std::size_t gamma, std::size_t r,
                                            WindowMode mode, const ThresholdParams& params = {});

} // namespace emso
