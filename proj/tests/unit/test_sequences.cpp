#include "emso/analytics.hpp"
#include "emso/error.hpp"
#include "emso/interval.hpp"
#include "emso/witness.hpp"

#include <doctest.h>

#include <cmath>

using namespace emso;

namespace {

long double f_ld(long double x, long double alpha)
{
    return std::pow(x, alpha) * std::log(x);
}

long double k_ld(std::size_t gamma, long double alpha)
{
    return 2.0L * (1.0L - (gamma + 2.0L) * alpha / (gamma + 1.0L));
}

} // namespace

TEST_CASE("part 1 floors")
{
    const double alpha = 0.3;
    const std::size_t gamma = 10;
    auto k = Part1Constants::defaults(alpha, gamma);
    CHECK(k.C1 == doctest::Approx((1 - alpha) / k_gamma(gamma, alpha) + 0.05));
    CHECK(k.C2 == doctest::Approx(0.95));
    CHECK(k.C == doctest::Approx((k.C1 + k.C2) / 2));
    CHECK(k.c == doctest::Approx(0.8 * (1 - alpha) / k_gamma(gamma, alpha)));
    CHECK_FALSE(part1_inadmissibility(alpha, gamma, k).has_value());

    for (std::size_t i = 1; i <= 10; ++i) {
        CAPTURE(i);
        auto row = sequence_part1(i, alpha, gamma, k);
        long double y_target = std::pow(4.0L, static_cast<long double>(i)) / (9.0L * (1.0L - alpha));
        CHECK(f_ld(row.m, alpha) <= y_target);
        CHECK(f_ld(row.m + 1.0L, alpha) > y_target);
        long double x_target = static_cast<long double>(s_value(i, gamma)) / (k.C * k_ld(gamma, alpha));
        CHECK(f_ld(row.n, alpha) <= x_target);
        CHECK(f_ld(row.n + 1.0L, alpha) > x_target);
        CHECK(row.gap_certificate == row.gap_hits.empty());
        CHECK(row.exist_certificate == !row.exist_hits.empty());
        for (auto a : row.exist_hits) {
            auto s = static_cast<double>(s_value(a, gamma));
            CHECK(s >= row.exist_low * (1 - 1e-12));
            CHECK(s <= row.exist_high * (1 + 1e-12));
        }
        for (auto a : row.gap_hits) {
            auto s = static_cast<double>(s_value(a, gamma));
            CHECK(s > row.gap_low * (1 - 1e-12));
            CHECK(s < row.gap_high * (1 + 1e-12));
        }
        CHECK(row.precision_bits >= Interval::kMinPrecision);
    }
}

TEST_CASE("part 1 certificates for i = 4..8")
{
    auto k = Part1Constants::defaults(0.3, 10);
    for (std::size_t i = 4; i <= 8; ++i) {
        CAPTURE(i);
        auto row = sequence_part1(i, 0.3, 10, k);
        CHECK(row.gap_certificate);
        CHECK(row.exist_certificate);
    }
    // At i = 3 the gap window is wide enough to contain s(1) = 12.
    auto row3 = sequence_part1(3, 0.3, 10, k);
    CHECK_FALSE(row3.gap_certificate);
    CHECK(row3.gap_hits == std::vector<std::size_t>{1});
}

TEST_CASE("part 1 errors")
{
    auto k = Part1Constants::defaults(0.3, 10);
    CHECK_THROWS_AS((void)sequence_part1(0, 0.3, 10, k), InvalidArgument);
    auto bad = k;
    bad.C1 = 0.01;
    CHECK(part1_inadmissibility(0.3, 10, bad).has_value());
    CHECK_THROWS_AS((void)sequence_part1(4, 0.3, 10, bad), InvalidArgument);
    CHECK_THROWS_AS((void)Part1Constants::defaults(0.95, 0), InvalidArgument);
    CHECK_THROWS_AS((void)sequence_part1(40, 0.3, 10, k), InvalidArgument);
}

TEST_CASE("part 2 admissibility")
{
    Part2Params p;
    CHECK_FALSE(part2_inadmissibility(p).has_value());
    p.gamma = 2;
    CHECK(part2_inadmissibility(p).has_value());
    p = {};
    p.beta = 0.3;
    CHECK(part2_inadmissibility(p).has_value());
    p = {};
    p.r = 1;
    CHECK(part2_inadmissibility(p).has_value());
    CHECK_THROWS_AS((void)sequence_part2(1, Part2Params{.gamma = 2}), InvalidArgument);
}

TEST_CASE("part 2 terms")
{
    // alpha = 0.3 makes gamma = 2 admissible; t = 2 gives omega_2(omega_2(2)) = 7
    // and a bracket of 21.
    Part2Params p{.alpha = 0.3, .beta = 0.1, .gamma = 2, .r = 2, .epsilon = 1.0};
    REQUIRE_FALSE(part2_inadmissibility(p).has_value());
    auto row = sequence_part2(1, p);
    CHECK(row.n.tower_index == 2);
    CHECK(row.m.tower_index == 3);
    CHECK(row.n.log_bracket == doctest::Approx(std::log(21.0)));
    CHECK(row.n.log_value_low <= row.n.log_value_high);
    // 2 floor(21^10): its log is within a hair of ln 2 + 10 ln 21.
    CHECK(row.n.log_value_low == doctest::Approx(std::log(2.0) + 10 * std::log(21.0)));
    REQUIRE(row.n.floor_a.has_value());
    // The floor is even for the n-term and odd for the m-term when the certificate holds.
    auto v = [&](std::size_t a) {
        return static_cast<double>(*w_star_vertex_count({a, p.gamma, p.r}));
    };
    double bound = std::exp(p.beta * row.n.log_value_low);
    CHECK(v(*row.n.floor_a) <= bound * (1 + 1e-9));
    CHECK(v(*row.n.floor_a + 1) > bound * (1 - 1e-9));
    CHECK(row.n.parity_ok == (*row.n.floor_a % 2 == 0));
    if (row.m.floor_a) {
        CHECK(row.m.parity_ok == (*row.m.floor_a % 2 == 1));
    }
    CHECK(row.n.certificate == (row.n.parity_ok && row.n.upper_ok));
}

TEST_CASE("part 2 with r = 3 holds for i = 2..4")
{
    Part2Params p{.alpha = 0.6, .beta = 0.25, .gamma = 4, .r = 3, .epsilon = 1.0};
    for (std::size_t i = 2; i <= 4; ++i) {
        CAPTURE(i);
        auto row = sequence_part2(i, p);
        CHECK(row.n.certificate);
        CHECK(row.m.certificate);
    }
}

TEST_CASE("window reports")
{
    auto wide = window_report(1000, 0.3, 10, 4, WindowMode::Part1);
    CHECK(wide.kind == WindowKind::Wide);
    CHECK_FALSE(wide.low_inclusive);
    CHECK_FALSE(wide.high_inclusive);
    auto kk = k_gamma(10, 0.3);
    auto k = Part1Constants::defaults(0.3, 10);
    CHECK(wide.window_low == doctest::Approx(k.c * kk * f(1000, 0.3)));
    CHECK(wide.window_high == doctest::Approx(kk * f(1000, 0.3) + 1.0));
    CHECK(wide.gap == wide.admissible_a.empty());
    for (auto a : wide.admissible_a) {
        auto s = static_cast<double>(s_value(a, 10));
        CHECK(s > wide.window_low);
        CHECK(s < wide.window_high);
    }

    auto narrow = window_report(1000, 0.3, 10, 4, WindowMode::Part1, {.kind = WindowKind::Narrow});
    CHECK(narrow.low_inclusive);
    CHECK(narrow.high_inclusive);
    CHECK(narrow.window_high == doctest::Approx(0.95 * kk * f(1000, 0.3)));

    auto p2 = window_report(1'000'000, 0.6, 4, 2, WindowMode::Part2);
    CHECK(p2.window_low == doctest::Approx(std::pow(1e6, 0.25)));
    REQUIRE(p2.floor_a.has_value());
    CHECK(static_cast<double>(*w_star_vertex_count({*p2.floor_a, 4, 2})) <= p2.window_low);
    CHECK(p2.parameters_admissible);

    CHECK_THROWS_AS((void)window_report(100, 0.9, 0, 4, WindowMode::Part1), InvalidArgument);
    CHECK_THROWS_AS((void)window_report(0, 0.3, 0, 4, WindowMode::Part1), InvalidArgument);
    CHECK(parse_window_mode("part2") == WindowMode::Part2);
    CHECK(window_kind_name(parse_window_kind("narrow")) == "narrow");
    CHECK_THROWS_AS((void)parse_window_kind("medium"), InvalidArgument);
}
