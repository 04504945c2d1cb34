#include "emso/error.hpp"
#include "emso/log_real.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace emso;

TEST_CASE("round trips and arithmetic against long double")
{
    const long double xs[] = {3.5L, -2.25L, 1e-30L, -7e40L, 1.0L, 0.125L};
    for (auto x : xs) {
        for (auto y : xs) {
            CAPTURE(static_cast<double>(x));
            CAPTURE(static_cast<double>(y));
            auto a = LogReal::from_double(x);
            auto b = LogReal::from_double(y);
            CHECK(static_cast<double>((a * b).value()) == doctest::Approx(static_cast<double>(x * y)));
            CHECK(static_cast<double>((a / b).value()) == doctest::Approx(static_cast<double>(x / y)));
            auto sum = (a + b).value();
            auto diff = (a - b).value();
            auto scale = std::max(std::fabs(x), std::fabs(y));
            CHECK(std::fabs(sum - (x + y)) <= 1e-15L * scale);
            CHECK(std::fabs(diff - (x - y)) <= 1e-15L * scale);
            CHECK(((a < b) == (x < y)));
        }
    }
}

TEST_CASE("zero, sign and cancellation")
{
    auto z = LogReal::zero();
    CHECK(z.is_zero());
    CHECK(z.log_abs() == -std::numeric_limits<long double>::infinity());
    CHECK(LogReal::from_double(0.0L).is_zero());
    auto a = LogReal::from_double(5.0L);
    CHECK((a - a).is_zero());
    CHECK((a + z) == a);
    CHECK((a * z).is_zero());
    CHECK((-a).sign() == -1);
    CHECK(LogReal::one().value() == 1.0L);
    CHECK_THROWS_AS((void)(a / z), InvalidArgument);
    CHECK(z < a);
    CHECK(-a < z);
}

TEST_CASE("values far beyond double range")
{
    auto big = LogReal::from_log(1e6L);
    auto prod = big * big;
    CHECK(prod.log_abs() == doctest::Approx(2e6));
    auto sum = big + big;
    CHECK(static_cast<double>(sum.log_abs()) == doctest::Approx(1e6 + std::log(2.0)));
    auto p = big.pow(0.5L);
    CHECK(static_cast<double>(p.log_abs()) == doctest::Approx(5e5));
    CHECK(big.value() == std::numeric_limits<long double>::infinity());
    CHECK(LogReal::from_log(-1e6L).value() == 0.0L);
    CHECK(LogReal::from_log(1e6L) > LogReal::from_log(1e6L - 1));
    CHECK(big.to_string().rfind("exp(", 0) == 0);
    CHECK(LogReal::zero().to_string() == "0");
}

TEST_CASE("log binomial and factorial")
{
    CHECK(static_cast<double>(log_factorial(10)) == doctest::Approx(std::log(3628800.0)));
    CHECK(static_cast<double>(log_binomial(10, 3)) == doctest::Approx(std::log(120.0)));
    CHECK(static_cast<double>(log_binomial(1000, 500)) == doctest::Approx(689.4672615678));
    CHECK(log_binomial(7, 0) == 0.0L);
}
