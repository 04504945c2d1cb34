#include "emso/experiment.hpp"

#include "emso/detect.hpp"
#include "emso/error.hpp"
#include "emso/random.hpp"
#include "emso/stats.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

namespace emso {

namespace {

using json = nlohmann::json;

template <typename T>
T get_as(const json& v, const std::string& key)
{
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw InvalidArgument("config key '" + key + "' has the wrong type");
    }
}

std::uint64_t get_uint(const json& v, const std::string& key)
{
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    if (v.is_number_float()) {
        double d = v.get<double>();
        if (d >= 0 && d == std::floor(d) && d < 0x1.0p64) {
            return static_cast<std::uint64_t>(d);
        }
    }
    throw InvalidArgument("config key '" + key + "' must be a non-negative integer");
}

SequenceTerm parse_term(const std::string& s)
{
    if (s == "n") {
        return SequenceTerm::N;
    }
    if (s == "m") {
        return SequenceTerm::M;
    }
    if (s == "both") {
        return SequenceTerm::Both;
    }
    throw InvalidArgument("sequence_term must be n, m or both");
}

struct TrialResult
{
    Outcome outcome = Outcome::None;
    std::uint64_t copies = 0;
};

double log_expected_dominating(const ExperimentConfig& cfg, std::uint64_t n, double p)
{
    LogReal total;
    for (std::size_t a = cfg.a_min; a <= cfg.a_max; ++a) {
        auto s = omega_checked(cfg.r, a);
        if (!s || *s > n || s_value(a, cfg.gamma, cfg.r) > n) {
            continue;
        }
        total += expected_W_dominating(n, p, a, cfg.gamma, cfg.r);
    }
    return static_cast<double>(total.log_abs());
}

std::string number(double x)
{
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    if (std::isnan(x)) {
        return "nan";
    }
    return fmt::format("{}", x);
}

} // namespace

void ExperimentConfig::validate() const
{
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidArgument("alpha must lie in (0, 1)");
    }
    if (r < 2) {
        throw InvalidArgument("r must be at least 2");
    }
    if (!(k_gamma(gamma, alpha) > 0.0)) {
        throw InvalidArgument("alpha must be below (gamma+1)/(gamma+2) so that k_gamma > 0");
    }
    if (a_min < 1 || a_min > a_max) {
        throw InvalidArgument("need 1 <= a_min <= a_max");
    }
    if (trials < 1) {
        throw InvalidArgument("trials must be at least 1");
    }
    if (n_values.empty() == sequence_indices.empty()) {
        throw InvalidArgument("give exactly one of n_values and sequence_indices");
    }
    for (auto n : n_values) {
        if (n < 1) {
            throw InvalidArgument("n values must be positive");
        }
    }
    if (p_override && !(*p_override >= 0.0 && *p_override <= 1.0)) {
        throw InvalidArgument("p_override must lie in [0, 1]");
    }
    if (workers < 1) {
        throw InvalidArgument("workers must be at least 1");
    }
    if (budget < 1) {
        throw InvalidArgument("budget must be positive");
    }
    if (!(epsilon > 0.0)) {
        throw InvalidArgument("epsilon must be positive");
    }
}

ExperimentConfig parse_experiment_config(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InvalidArgument("config must be a JSON object");
    }
    ExperimentConfig cfg;
    for (const auto& [key, v] : doc.items()) {
        if (key == "alpha") {
            cfg.alpha = get_as<double>(v, key);
        } else if (key == "gamma") {
            cfg.gamma = get_uint(v, key);
        } else if (key == "r") {
            cfg.r = get_uint(v, key);
        } else if (key == "mode") {
            cfg.mode = parse_window_mode(get_as<std::string>(v, key));
        } else if (key == "window") {
            cfg.window = parse_window_kind(get_as<std::string>(v, key));
        } else if (key == "n_values") {
            if (!v.is_array()) {
                throw InvalidArgument("n_values must be an array");
            }
            for (const auto& x : v) {
                cfg.n_values.push_back(get_uint(x, key));
            }
        } else if (key == "sequence_indices") {
            if (!v.is_array()) {
                throw InvalidArgument("sequence_indices must be an array");
            }
            for (const auto& x : v) {
                cfg.sequence_indices.push_back(get_uint(x, key));
            }
        } else if (key == "sequence_term") {
            cfg.sequence_term = parse_term(get_as<std::string>(v, key));
        } else if (key == "a_min") {
            cfg.a_min = get_uint(v, key);
        } else if (key == "a_max") {
            cfg.a_max = get_uint(v, key);
        } else if (key == "a_range") {
            if (!v.is_array() || v.size() != 2) {
                throw InvalidArgument("a_range must be [a_min, a_max]");
            }
            cfg.a_min = get_uint(v[0], key);
            cfg.a_max = get_uint(v[1], key);
        } else if (key == "trials") {
            cfg.trials = get_uint(v, key);
        } else if (key == "seed") {
            cfg.seed = get_uint(v, key);
        } else if (key == "budget") {
            cfg.budget = get_uint(v, key);
        } else if (key == "p_override") {
            if (!v.is_null()) {
                cfg.p_override = get_as<double>(v, key);
            }
        } else if (key == "beta") {
            cfg.beta = get_as<double>(v, key);
        } else if (key == "epsilon") {
            cfg.epsilon = get_as<double>(v, key);
        } else if (key == "workers") {
            cfg.workers = get_uint(v, key);
        } else if (key == "timing") {
            cfg.timing = get_as<bool>(v, key);
        } else if (key == "count_copies") {
            cfg.count_copies = get_as<bool>(v, key);
        } else if (key == "output") {
            cfg.output = get_as<std::string>(v, key);
        } else {
            throw InvalidArgument("unknown config key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str());
}

ProbabilityEstimate estimate(std::uint64_t successes, std::uint64_t trials)
{
    auto w = wilson_estimate(successes, trials);
    ProbabilityEstimate e;
    e.successes = w.successes;
    e.trials = w.trials;
    e.p_hat = w.p_hat;
    e.ci_low = w.ci_low;
    e.ci_high = w.ci_high;
    return e;
}

std::vector<std::uint64_t> experiment_n_values(const ExperimentConfig& cfg)
{
    if (!cfg.n_values.empty()) {
        return cfg.n_values;
    }
    std::vector<std::uint64_t> out;
    auto push = [&](std::uint64_t v) { out.push_back(v); };
    for (auto i : cfg.sequence_indices) {
        if (cfg.mode == WindowMode::Part1) {
            auto row = sequence_part1(i, cfg.alpha, cfg.gamma, Part1Constants::defaults(cfg.alpha, cfg.gamma));
            if (cfg.sequence_term != SequenceTerm::M) push(row.n);
            if (cfg.sequence_term != SequenceTerm::N) push(row.m);
        } else {
            auto row = sequence_part2(i, {cfg.alpha, cfg.beta, cfg.gamma, cfg.r, cfg.epsilon});
            for (const auto* t : {&row.n, &row.m}) {
                if ((t == &row.n && cfg.sequence_term == SequenceTerm::M) ||
                    (t == &row.m && cfg.sequence_term == SequenceTerm::N)) {
                    continue;
                }
                if (!t->exact) {
                    throw InvalidArgument(fmt::format("part-2 term for i={} does not fit 64 bits", i));
                }
                push(*t->exact);
            }
        }
    }
    return out;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg)
{
    cfg.validate();
    std::vector<ExperimentRow> rows;
    for (auto n : experiment_n_values(cfg)) {
        if (n > std::numeric_limits<Vertex>::max()) {
            throw InvalidArgument(fmt::format("n = {} is too large to sample", n));
        }
        const auto start = std::chrono::steady_clock::now();
        const double p = cfg.p_override ? *cfg.p_override : edge_probability(static_cast<double>(n), cfg.alpha);
        const std::uint64_t base = derive_stream(cfg.seed, n);

        std::vector<TrialResult> results(cfg.trials);
        std::atomic<std::uint64_t> next{0};
        auto work = [&] {
            for (std::uint64_t t = next++; t < cfg.trials; t = next++) {
                SamplerConfig sc{static_cast<std::size_t>(n), p, cfg.seed, derive_stream(base, t)};
                auto g = sample_gnp(sc);
                auto d = find_dominating_induced_W(g, cfg.gamma, cfg.r, cfg.a_min, cfg.a_max,
                                                   SearchBudget{cfg.budget});
                TrialResult tr{d.outcome, 0};
                if (cfg.count_copies) {
                    for (std::size_t a = cfg.a_min; a <= cfg.a_max; ++a) {
                        auto c = find_induced_W(g, {a, cfg.gamma, cfg.r}, SearchMode::CountAll,
                                                SearchBudget{cfg.budget});
                        tr.copies += c.count;
                    }
                }
                results[t] = tr;
            }
        };
        const std::size_t nworkers = std::min<std::uint64_t>(cfg.workers, cfg.trials);
        if (nworkers <= 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < nworkers; ++w) {
                pool.emplace_back(work);
            }
        }

        std::uint64_t successes = 0;
        std::uint64_t exceeded = 0;
        RunningStats copies;
        for (const auto& tr : results) {
            successes += tr.outcome == Outcome::Found;
            exceeded += tr.outcome == Outcome::BudgetExceeded;
            copies.add(static_cast<double>(tr.copies));
        }

        ExperimentRow row;
        row.n = n;
        row.alpha = cfg.alpha;
        row.p = p;
        row.gamma = cfg.gamma;
        row.r = cfg.r;
        row.a_min = cfg.a_min;
        row.a_max = cfg.a_max;
        row.estimate = estimate(successes, cfg.trials);
        row.estimate.budget_exceeded = exceeded;
        if (cfg.count_copies) {
            row.estimate.mean_count = copies.mean();
            row.estimate.sd_count = copies.sd();
        }
        row.log_expected_W_dom = log_expected_dominating(cfg, n, p);
        ThresholdParams tp;
        tp.kind = cfg.window;
        tp.beta = cfg.beta;
        tp.epsilon = cfg.epsilon;
        if (cfg.mode == WindowMode::Part1) {
            auto k = Part1Constants::defaults(cfg.alpha, cfg.gamma);
            k.epsilon = cfg.epsilon;
            tp.constants = k;
        }
        auto rep = window_report(n, cfg.alpha, cfg.gamma, cfg.r, cfg.mode, tp);
        row.window_low = rep.window_low;
        row.window_high = rep.window_high;
        row.admissible_a_count = rep.admissible_a.size();
        row.seed = cfg.seed;
        if (cfg.timing) {
            row.runtime_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
        rows.push_back(row);
    }
    return rows;
}

std::string csv_header()
{
    return "n,alpha,p,gamma,r,a_min,a_max,trials,successes,p_hat,ci_low,ci_high,budget_exceeded,"
           "log_expected_W_dom,window_low,window_high,admissible_a_count,seed,runtime_ms";
}

std::string csv_line(const ExperimentRow& row)
{
    const auto& e = row.estimate;
    return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}", row.n, number(row.alpha),
                       number(row.p), row.gamma, row.r, row.a_min, row.a_max, e.trials, e.successes,
                       number(e.p_hat), number(e.ci_low), number(e.ci_high), e.budget_exceeded,
                       number(row.log_expected_W_dom), number(row.window_low), number(row.window_high),
                       row.admissible_a_count, row.seed, number(row.runtime_ms));
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows)
{
    out << csv_header() << '\n';
    for (const auto& r : rows) {
        out << csv_line(r) << '\n';
    }
}

} // namespace emso
