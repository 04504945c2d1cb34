#include "emso/analytics.hpp"
#include "emso/detect.hpp"
#include "emso/error.hpp"
#include "emso/random.hpp"
#include "emso/search.hpp"
#include "emso/stats.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace emso;

TEST_CASE("closed forms")
{
    CHECK(k_gamma(0, 0.25) == doctest::Approx(1.0));
    CHECK(k_gamma(1, 0.3) == doctest::Approx(1.1));
    CHECK(k_gamma(10, 0.3) == doctest::Approx(2.0 * (1.0 - 12.0 * 0.3 / 11.0)));
    CHECK(f(100, 0.5) == doctest::Approx(46.0517).epsilon(1e-5));
    CHECK(f(1, 0.5) == 0.0);
    CHECK_THROWS_AS((void)f(0.5, 0.5), InvalidArgument);
    CHECK(edge_probability(100, 0.5) == doctest::Approx(0.1));
    CHECK_THROWS_AS((void)k_gamma(0, 1.0), InvalidArgument);

    for (double x : {1.5, 10.0, 1234.5, 1e9}) {
        for (double alpha : {0.1, 0.3, 0.9}) {
            CHECK(inverse_f(f(x, alpha), alpha) == doctest::Approx(x).epsilon(1e-10));
        }
    }
    CHECK(inverse_f(0.0, 0.3) == doctest::Approx(1.0));
    CHECK_THROWS_AS((void)inverse_f(-1.0, 0.3), InvalidArgument);
}

TEST_CASE("sizes and divisor exponents")
{
    CHECK(s_value(1, 0) == 2);
    CHECK(s_value(2, 0) == 7);
    CHECK(s_value(2, 1, 2) == 8);
    for (std::size_t a = 1; a <= 4; ++a) {
        for (std::size_t gamma = 0; gamma <= 2; ++gamma) {
            CHECK(s_value(a, gamma, 3) == w_vertex_count({a, gamma, 3}));
        }
    }
    CHECK(expected_W_divisor_exponent(1) == 0);
    CHECK(expected_W_divisor_exponent(2) == 1);
    CHECK(expected_W_divisor_exponent(3) == 5);
    CHECK(expected_W_divisor_exponent(3, 2) == 3);
    CHECK(expected_W_star_divisor_exponent(1, 2) == 0);
    // omega_2(3) = 7, omega_2(7) = 127, (127 - 1)/2 = 63.
    CHECK(expected_W_star_divisor_exponent(3, 2) == 63);
    CHECK(expected_W_star_divisor_exponent(2, 4) == (omega(4, 5) - 1) / 4);
}

TEST_CASE("expected counts: exact small values")
{
    // C(7,2) 2! p = 21 for a single edge at p = 1/2.
    CHECK(static_cast<double>(expected_W(7, 0.5, 1, 0).value()) == doctest::Approx(21.0));
    // W_1 with gamma = 1 is P_3: C(n,3) 3! p^2 (1-p).
    double p = 0.2;
    CHECK(static_cast<double>(expected_W(10, p, 1, 1).value()) ==
          doctest::Approx(120.0 * 6.0 * p * p * (1 - p)));
    CHECK_THROWS_AS((void)expected_W(5, 0.5, 2, 0), InvalidArgument);
    auto plain = expected_W(30, 0.3, 1, 0);
    auto dom = expected_W_dominating(30, 0.3, 1, 0);
    CHECK(dom < plain);
    CHECK(static_cast<double>((dom / plain).value()) == doctest::Approx(std::pow(1 - 0.49, 28)));
    CHECK(domination_probability(10, 0.5, 2) == doctest::Approx(0.100113).epsilon(1e-5));
    CHECK(domination_probability(5, 0.5, 5) == 1.0);
    // Astronomically large values stay finite in log space.
    auto huge = expected_W(1'000'000'000, 0.5, 3, 2);
    CHECK(std::isfinite(static_cast<double>(huge.log_abs())));
}

namespace {

// Mean labeled-embedding count of `pattern` over `samples` draws of G(n, p),
// divided by `divisor`.
RunningStats embedding_counts(const Graph& pattern, std::size_t n, double p, std::uint64_t samples, double divisor)
{
    RunningStats s;
    for (std::uint64_t t = 0; t < samples; ++t) {
        auto g = sample_gnp({n, p, 99, t});
        s.add(static_cast<double>(count_induced_embeddings(pattern, g)) / divisor);
    }
    return s;
}

} // namespace

TEST_CASE("Monte Carlo agreement of expected_W")
{
    auto w = build_W({2, 0, 2});
    double divisor = std::pow(2.0, static_cast<double>(expected_W_divisor_exponent(2, 2)));
    auto s = embedding_counts(w.graph, 12, 0.4, 1500, divisor);
    double expected = static_cast<double>(expected_W(12, 0.4, 2, 0, 2).value());
    CHECK(std::abs(s.mean() - expected) < 4 * s.se());
}

TEST_CASE("Monte Carlo agreement of expected_W_star")
{
    // W*_1 with gamma = 0 is P_4.
    auto w = build_W_star({1, 0, 2});
    REQUIRE(w.graph.order() == 4);
    auto s = embedding_counts(w.graph, 14, 0.3, 1500, 1.0);
    double expected = static_cast<double>(expected_W_star(14, 0.3, 1, 0, 2).value());
    CHECK(std::abs(s.mean() - expected) < 4 * s.se());
}

TEST_CASE("Monte Carlo agreement of domination_probability")
{
    const std::size_t n = 20;
    const std::size_t k = 3;
    const double p = 0.3;
    std::uint64_t hits = 0;
    const std::uint64_t samples = 20000;
    for (std::uint64_t t = 0; t < samples; ++t) {
        auto g = sample_gnp({n, p, 5, t});
        hits += is_dominating(g, VertexSet(n, {0, 1, 2})) ? 1 : 0;
    }
    double q = domination_probability(n, p, k);
    double freq = static_cast<double>(hits) / samples;
    CHECK(std::abs(freq - q) < 4 * std::sqrt(q * (1 - q) / samples));
}
