#include "emso/error.hpp"
#include "emso/experiment.hpp"

#include <doctest.h>

#include <algorithm>
#include <limits>
#include <sstream>

using namespace emso;

namespace {

std::string csv(const ExperimentConfig& cfg)
{
    std::ostringstream out;
    write_csv(out, run_experiment(cfg));
    return out.str();
}

} // namespace

TEST_CASE("config parsing")
{
    auto cfg = parse_experiment_config(R"({"alpha": 0.25, "gamma": 1, "r": 2, "n_values": [10, 20],
        "a_range": [1, 2], "trials": 7, "seed": 9, "p_override": 0.5, "workers": 3})");
    CHECK(cfg.alpha == 0.25);
    CHECK(cfg.gamma == 1);
    CHECK(cfg.r == 2);
    CHECK(cfg.n_values == std::vector<std::uint64_t>{10, 20});
    CHECK(cfg.a_min == 1);
    CHECK(cfg.a_max == 2);
    CHECK(cfg.trials == 7);
    CHECK(cfg.p_override == 0.5);
    CHECK(cfg.workers == 3);

    auto seq = parse_experiment_config(R"({"alpha": 0.3, "gamma": 10, "sequence_indices": [3, 4],
        "sequence_term": "n", "mode": "part1", "window": "narrow"})");
    CHECK(seq.sequence_term == SequenceTerm::N);
    CHECK(seq.window == WindowKind::Narrow);
    CHECK(experiment_n_values(seq).size() == 2);
    seq.sequence_term = SequenceTerm::Both;
    CHECK(experiment_n_values(seq).size() == 4);

    CHECK_THROWS_AS((void)parse_experiment_config("{"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_experiment_config(R"({"alpha": 0.3, "n_values": [5], "colour": 1})"),
                    InvalidArgument);
    CHECK_THROWS_AS((void)parse_experiment_config(R"({"alpha": "x", "n_values": [5]})"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_experiment_config(R"({"alpha": 1.5, "n_values": [5]})"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_experiment_config(R"({"alpha": 0.3})"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_experiment_config(R"({"n_values": [5], "sequence_indices": [1]})"),
                    InvalidArgument);
    CHECK_THROWS_AS((void)parse_experiment_config(R"({"n_values": [5], "a_range": [3, 2]})"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_experiment_config(R"({"n_values": [5], "trials": -1})"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_experiment_config(R"([1, 2])"), InvalidArgument);
}

TEST_CASE("complete graphs contain no induced W_2")
{
    ExperimentConfig cfg;
    cfg.gamma = 0;
    cfg.r = 4;
    cfg.n_values = {s_value(2, 0)};
    cfg.a_min = cfg.a_max = 2;
    cfg.trials = 1;
    cfg.p_override = 1.0;
    auto rows = run_experiment(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].estimate.successes == 0);
    CHECK(rows[0].estimate.p_hat == 0.0);
}

TEST_CASE("dense graphs almost surely have a dominating edge")
{
    ExperimentConfig cfg;
    cfg.gamma = 0;
    cfg.n_values = {7};
    cfg.trials = 200;
    cfg.p_override = 0.99;
    auto rows = run_experiment(cfg);
    CHECK(rows[0].estimate.p_hat >= 0.9);
    CHECK(rows[0].p == 0.99);
}

TEST_CASE("results do not depend on the worker count")
{
    ExperimentConfig cfg;
    cfg.alpha = 0.4;
    cfg.gamma = 0;
    cfg.r = 2;
    cfg.n_values = {8, 12, 16};
    cfg.a_min = 1;
    cfg.a_max = 2;
    cfg.trials = 60;
    cfg.seed = 1234;
    cfg.count_copies = true;
    auto one = csv(cfg);
    cfg.workers = 4;
    CHECK(csv(cfg) == one);
    cfg.workers = 7;
    CHECK(csv(cfg) == one);
    cfg.seed = 1235;
    CHECK(csv(cfg) != one);
    CHECK(one.rfind(csv_header(), 0) == 0);
}

TEST_CASE("budget-exceeded trials are tallied as failures")
{
    ExperimentConfig cfg;
    cfg.gamma = 0;
    cfg.r = 2;
    cfg.n_values = {30};
    cfg.a_min = 1;
    cfg.a_max = 3;
    cfg.p_override = 0.5;
    cfg.trials = 5;
    cfg.budget = 1;
    auto rows = run_experiment(cfg);
    CHECK(rows[0].estimate.budget_exceeded == 5);
    CHECK(rows[0].estimate.successes == 0);
}

TEST_CASE("Wilson intervals")
{
    auto none = estimate(0, 100);
    CHECK(none.p_hat == 0.0);
    CHECK(none.ci_low == 0.0);
    CHECK(none.ci_high == doctest::Approx(0.037).epsilon(0.01));
    auto all = estimate(100, 100);
    CHECK(all.ci_high == doctest::Approx(1.0));
    CHECK(all.ci_low == doctest::Approx(0.963).epsilon(0.01));
    auto half = estimate(50, 100);
    CHECK(half.ci_low == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(half.ci_high == doctest::Approx(0.5962).epsilon(1e-3));
}

TEST_CASE("csv formatting")
{
    ExperimentRow row;
    row.n = 10;
    row.alpha = 0.3;
    row.p = 0.5;
    row.log_expected_W_dom = -std::numeric_limits<double>::infinity();
    auto line = csv_line(row);
    CHECK(line.find("-inf") != std::string::npos);
    CHECK(line.find('\n') == std::string::npos);
    auto header = csv_header();
    auto commas = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
    CHECK(commas(header) == commas(line));
}
