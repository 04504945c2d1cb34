#pragma once

#include "emso/analytics.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace emso {

/// Which sequence terms to take when n comes from sequence indices.
enum class SequenceTerm { N, M, Both };

struct ExperimentConfig
{
    double alpha = 0.3;
    std::size_t gamma = 0;
    std::size_t r = 4;
    WindowMode mode = WindowMode::Part1;
    WindowKind window = WindowKind::Wide;
    /// Explicit n values, or sequence indices resolved through the mode's
    /// sequence (n_i, m_i). Exactly one of the two is non-empty.
    std::vector<std::uint64_t> n_values;
    std::vector<std::size_t> sequence_indices;
    SequenceTerm sequence_term = SequenceTerm::Both;
    std::size_t a_min = 1;
    std::size_t a_max = 1;
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    std::uint64_t budget = 10'000'000;
    /// Replaces p = n^{-alpha}.
    std::optional<double> p_override;
    /// Part 2 window and sequences.
    double beta = 0.25;
    double epsilon = 1.0;
    std::size_t workers = 1;
    /// Fill runtime_ms; off keeps the CSV byte-reproducible.
    bool timing = false;
    /// Also count all labeled induced copies of W_a, a in range, per trial.
    bool count_copies = false;
    std::string output;

    void validate() const;
};

/// Parses a flat JSON object. Unknown keys and ill-typed values throw
/// InvalidArgument.
[[nodiscard]] ExperimentConfig parse_experiment_config(const std::string& json_text);
[[nodiscard]] ExperimentConfig load_experiment_config(const std::string& path);

struct ProbabilityEstimate
{
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    double mean_count = 0.0;
    double sd_count = 0.0;
    std::uint64_t budget_exceeded = 0;
};

/// Point estimate and 95% Wilson interval.
[[nodiscard]] ProbabilityEstimate estimate(std::uint64_t successes, std::uint64_t trials);

struct ExperimentRow
{
    std::uint64_t n = 0;
    double alpha = 0;
    double p = 0;
    std::size_t gamma = 0;
    std::size_t r = 4;
    std::size_t a_min = 1;
    std::size_t a_max = 1;
    ProbabilityEstimate estimate;
    /// ln of the sum of expected_W_dominating over the a in range that fit.
    double log_expected_W_dom = 0;
    double window_low = 0;
    double window_high = 0;
    std::size_t admissible_a_count = 0;
    std::uint64_t seed = 0;
    double runtime_ms = 0;
};

/// The n values the config covers, in order.
[[nodiscard]] std::vector<std::uint64_t> experiment_n_values(const ExperimentConfig& cfg);

/// Trial t at size n samples with stream derive_stream(derive_stream(seed,
/// n), t). Results do not depend on the worker count. A trial that exhausts
/// the budget counts as a non-success and is tallied in budget_exceeded.
[[nodiscard]] std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string csv_line(const ExperimentRow& row);
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

} // namespace emso
