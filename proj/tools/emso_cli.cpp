// emso: command-line front end to the emso library.
//
// Exit codes: 0 success, 1 runtime failure, 2 invalid input or usage,
// 3 search or evaluation budget exhausted.

#include "emso/analytics.hpp"
#include "emso/detect.hpp"
#include "emso/error.hpp"
#include "emso/experiment.hpp"
#include "emso/graph.hpp"
#include "emso/logic.hpp"
#include "emso/process.hpp"
#include "emso/random.hpp"
#include "emso/witness.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitRuntime = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw emso::InvalidArgument("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw emso::InvalidArgument("cannot write '" + path + "'");
    }
    out << text;
}

void emit_graph(const emso::Graph& g, const std::vector<emso::Role>& roles, const std::string& out,
                const std::string& roles_path)
{
    emit(emso::write_edge_list(g), out);
    std::string sidecar = roles_path;
    if (sidecar.empty() && !out.empty() && out != "-") {
        sidecar = out + ".roles";
    }
    if (!sidecar.empty()) {
        emit(emso::write_roles(roles), sidecar);
    }
}

// Doubles in JSON: non-finite values become strings.
json number(double x)
{
    if (std::isfinite(x)) {
        return x;
    }
    return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

struct BuildArgs
{
    std::string family = "w";
    std::size_t a = 1;
    std::size_t gamma = 0;
    std::size_t r = 4;
    std::uint64_t max_vertices = emso::kDefaultWitnessVertexBudget;
    std::string out;
    std::string roles;
};

int run_build(const BuildArgs& args)
{
    emso::WitnessParams p{args.a, args.gamma, args.r};
    auto w = args.family == "w" ? emso::build_W(p) : emso::build_W_star(p, args.max_vertices);
    emit_graph(w.graph, w.roles, args.out, args.roles);
    return 0;
}

struct ProcessArgs
{
    std::size_t gamma = 2;
    std::size_t r = 2;
    std::size_t steps = 0;
    bool trace = false;
    std::string out;
    std::string roles;
};

int run_process(const ProcessArgs& args)
{
    auto state = emso::process_init(args.gamma, args.r);
    for (std::size_t i = 0; i < args.steps; ++i) {
        auto rule = state.next_rule();
        auto before = state.vertex_count();
        state.advance();
        if (args.trace) {
            std::cerr << fmt::format("step {} rule {} +{} vertices={} floor={}\n", state.step(),
                                     static_cast<int>(rule), state.vertex_count() - before, state.vertex_count(),
                                     state.floor());
        }
    }
    emit_graph(state.graph(), state.roles(), args.out, args.roles);
    return 0;
}

struct EvaluateArgs
{
    std::string graph;
    std::string formula;
    std::uint64_t budget = 1'000'000'000;
    bool stats = false;
};

int run_evaluate(const EvaluateArgs& args)
{
    auto g = emso::read_edge_list_file(args.graph);
    auto phi = emso::parse_formula(slurp(args.formula));
    emso::EvalOptions opts;
    opts.max_steps = args.budget;
    emso::EvalStats stats;
    try {
        bool value = emso::evaluate(g, phi, opts, &stats);
        std::cout << (value ? "true" : "false") << '\n';
    } catch (const emso::BudgetExceeded& e) {
        std::cout << "budget_exceeded\n";
        std::cerr << "emso: " << e.what() << '\n';
        return kExitBudget;
    }
    if (args.stats) {
        std::cerr << fmt::format("steps {} first_order {} emso {}\n", stats.steps, phi.is_first_order(),
                                 phi.is_emso());
    }
    return 0;
}

struct SampleArgs
{
    std::size_t n = 0;
    std::optional<double> p;
    std::optional<double> alpha;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    std::string out;
};

int run_sample(const SampleArgs& args)
{
    if (args.p.has_value() == args.alpha.has_value()) {
        throw emso::InvalidArgument("give exactly one of --p and --alpha");
    }
    const double p = args.p ? *args.p : emso::edge_probability(static_cast<double>(args.n), *args.alpha);
    // Same stream derivation as the experiment runner, so trials can be
    // reproduced one at a time.
    emso::SamplerConfig cfg{args.n, p, args.seed,
                            emso::derive_stream(emso::derive_stream(args.seed, args.n), args.trial)};
    emit(emso::write_edge_list(emso::sample_gnp(cfg)), args.out);
    return 0;
}

struct DetectArgs
{
    std::string graph;
    std::size_t gamma = 0;
    std::size_t r = 4;
    std::optional<std::size_t> a;
    std::optional<std::size_t> a_max;
    std::size_t a_min = 1;
    bool dominating = false;
    bool count = false;
    std::uint64_t budget = 100'000'000;
};

int run_detect(const DetectArgs& args)
{
    if (args.a.has_value() == args.a_max.has_value()) {
        throw emso::InvalidArgument("give exactly one of --a and --a-max");
    }
    if (args.count && args.dominating) {
        throw emso::InvalidArgument("--count and --dominating cannot be combined");
    }
    auto g = emso::read_edge_list_file(args.graph);
    const std::size_t hi = args.a ? *args.a : *args.a_max;
    const std::size_t lo = args.a ? *args.a : args.a_min;
    emso::SearchBudget budget{args.budget};
    emso::DetectionResult res;
    if (args.dominating) {
        res = emso::find_dominating_induced_W(g, args.gamma, args.r, lo, hi, budget);
    } else {
        auto mode = args.count ? emso::SearchMode::CountAll : emso::SearchMode::FindFirst;
        std::uint64_t total_count = 0;
        std::uint64_t total_exp = 0;
        for (std::size_t a = hi; a >= lo && a >= 1; --a) {
            budget.max_expansions = args.budget - std::min(args.budget, total_exp);
            res = emso::find_induced_W(g, {a, args.gamma, args.r}, mode, budget);
            total_exp += res.expansions;
            total_count += res.count;
            if (res.outcome == emso::Outcome::BudgetExceeded ||
                (mode == emso::SearchMode::FindFirst && res.outcome == emso::Outcome::Found)) {
                break;
            }
        }
        res.expansions = total_exp;
        if (args.count) {
            res.count = total_count;
        }
    }
    json out;
    out["outcome"] = std::string(emso::outcome_name(res.outcome));
    out["gamma"] = args.gamma;
    out["r"] = args.r;
    out["a_min"] = lo;
    out["a_max"] = hi;
    out["dominating"] = args.dominating;
    if (res.outcome == emso::Outcome::Found) {
        out["a"] = res.a;
    } else {
        out["a"] = nullptr;
    }
    if (args.count) {
        out["count"] = res.count;
    }
    out["expansions"] = res.expansions;
    if (res.embedding) {
        out["embedding"] = res.embedding->image;
    } else {
        out["embedding"] = nullptr;
    }
    std::cout << out.dump(2) << '\n';
    return res.outcome == emso::Outcome::BudgetExceeded ? kExitBudget : 0;
}

struct ThresholdArgs
{
    double alpha = 0.3;
    std::size_t gamma = 10;
    std::size_t r = 4;
    std::uint64_t n = 1;
    std::string mode = "part1";
    std::string window = "wide";
    double beta = 0.25;
    double epsilon = 1.0;
};

int run_thresholds(const ThresholdArgs& args)
{
    emso::ThresholdParams tp;
    tp.kind = emso::parse_window_kind(args.window);
    tp.beta = args.beta;
    tp.epsilon = args.epsilon;
    auto mode = emso::parse_window_mode(args.mode);
    if (mode == emso::WindowMode::Part1) {
        auto k = emso::Part1Constants::defaults(args.alpha, args.gamma);
        k.epsilon = args.epsilon;
        tp.constants = k;
    }
    auto rep = emso::window_report(args.n, args.alpha, args.gamma, args.r, mode, tp);
    json out;
    out["mode"] = emso::window_mode_name(rep.mode);
    out["window"] = emso::window_kind_name(rep.kind);
    out["n"] = rep.n;
    out["alpha"] = rep.alpha;
    out["gamma"] = rep.gamma;
    out["r"] = rep.r;
    out["k_gamma"] = number(rep.k_gamma);
    out["f_n"] = number(rep.f_n);
    out["window_low"] = number(rep.window_low);
    out["window_high"] = number(rep.window_high);
    out["low_inclusive"] = rep.low_inclusive;
    out["high_inclusive"] = rep.high_inclusive;
    out["admissible_a"] = rep.admissible_a;
    out["outside_a"] = rep.outside_a;
    out["gap"] = rep.gap;
    out["parameters_admissible"] = rep.parameters_admissible;
    if (rep.floor_a) {
        out["floor_a"] = *rep.floor_a;
    }
    out["precision_bits"] = rep.precision_bits;
    std::cout << out.dump(2) << '\n';
    return 0;
}

struct SequenceArgs
{
    std::string mode = "part1";
    std::size_t i_min = 1;
    std::size_t i_max = 1;
    std::optional<double> alpha;
    std::optional<std::size_t> gamma;
    std::size_t r = 2;
    double beta = 0.25;
    double epsilon = 1.0;
    std::optional<double> C1;
    std::optional<double> C2;
    std::optional<double> C;
    std::optional<double> c;
};

std::string join(const std::vector<std::size_t>& v)
{
    return fmt::format("{}", fmt::join(v, ";"));
}

int run_sequences(const SequenceArgs& args)
{
    auto mode = emso::parse_window_mode(args.mode);
    if (args.i_min < 1 || args.i_min > args.i_max) {
        throw emso::InvalidArgument("need 1 <= --i-min <= --i-max");
    }
    if (mode == emso::WindowMode::Part1) {
        const double alpha = args.alpha.value_or(0.3);
        const std::size_t gamma = args.gamma.value_or(10);
        auto k = emso::Part1Constants::defaults(alpha, gamma);
        k.C1 = args.C1.value_or(k.C1);
        k.C2 = args.C2.value_or(k.C2);
        k.C = args.C.value_or((k.C1 + k.C2) / 2.0);
        k.c = args.c.value_or(k.c);
        k.epsilon = args.epsilon;
        std::cout << "i,m_i,n_i,f_m,f_n,gap_low,gap_high,gap_hits,gap_certificate,exist_low,exist_high,"
                     "exist_hits,exist_certificate,precision_bits\n";
        for (std::size_t i = args.i_min; i <= args.i_max; ++i) {
            auto row = emso::sequence_part1(i, alpha, gamma, k);
            std::cout << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", row.i, row.m, row.n, row.f_m,
                                     row.f_n, row.gap_low, row.gap_high, join(row.gap_hits),
                                     row.gap_certificate, row.exist_low, row.exist_high, join(row.exist_hits),
                                     row.exist_certificate, row.precision_bits);
        }
        return 0;
    }
    emso::Part2Params p{args.alpha.value_or(0.6), args.beta, args.gamma.value_or(4), args.r, args.epsilon};
    std::cout << "i,term,tower_index,log_value_low,log_value_high,exact,floor_a,parity_ok,upper_ok,certificate,"
                 "precision_bits\n";
    for (std::size_t i = args.i_min; i <= args.i_max; ++i) {
        auto row = emso::sequence_part2(i, p);
        for (const auto& [name, t] : {std::pair{"n", &row.n}, std::pair{"m", &row.m}}) {
            std::cout << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", row.i, name, t->tower_index,
                                     t->log_value_low, t->log_value_high,
                                     t->exact ? std::to_string(*t->exact) : std::string(),
                                     t->floor_a ? std::to_string(*t->floor_a) : std::string(), t->parity_ok,
                                     t->upper_ok, t->certificate, row.precision_bits);
        }
    }
    return 0;
}

struct ExperimentArgs
{
    std::string config;
    std::string out;
    std::optional<std::size_t> workers;
};

int run_experiment_cmd(const ExperimentArgs& args)
{
    auto cfg = emso::load_experiment_config(args.config);
    if (args.workers) {
        cfg.workers = *args.workers;
        cfg.validate();
    }
    auto rows = emso::run_experiment(cfg);
    std::ostringstream csv;
    emso::write_csv(csv, rows);
    emit(csv.str(), args.out.empty() ? cfg.output : args.out);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Witness graphs, graph processes, detection, logic and thresholds for sparse random graphs"};
    app.require_subcommand(1);
    int status = 0;

    BuildArgs build;
    auto* b = app.add_subcommand("build", "Construct W_a^gamma or W*_a as an edge list with a role sidecar");
    b->add_option("--family", build.family, "w or wstar")->check(CLI::IsMember({"w", "wstar"}));
    b->add_option("--a", build.a)->required();
    b->add_option("--gamma", build.gamma)->required();
    b->add_option("--r", build.r, "tree arity");
    b->add_option("--max-vertices", build.max_vertices, "size budget for wstar");
    b->add_option("--out", build.out, "edge-list file (default stdout)");
    b->add_option("--roles", build.roles, "role sidecar file (default <out>.roles)");
    b->callback([&] { status = run_build(build); });

    ProcessArgs proc;
    auto* pr = app.add_subcommand("process", "Run the (gamma, r) graph process");
    pr->add_option("--gamma", proc.gamma)->required();
    pr->add_option("--r", proc.r)->required();
    pr->add_option("--steps", proc.steps)->required();
    pr->add_flag("--trace", proc.trace, "log each step to stderr");
    pr->add_option("--out", proc.out);
    pr->add_option("--roles", proc.roles);
    pr->callback([&] { status = run_process(proc); });

    EvaluateArgs ev;
    auto* e = app.add_subcommand("evaluate", "Model-check a formula on a graph");
    e->add_option("--graph", ev.graph)->required();
    e->add_option("--formula", ev.formula)->required();
    e->add_option("--budget", ev.budget, "node-visit cap");
    e->add_flag("--stats", ev.stats, "report step count to stderr");
    e->callback([&] { status = run_evaluate(ev); });

    SampleArgs sa;
    auto* s = app.add_subcommand("sample", "Sample G(n, p) reproducibly");
    s->add_option("--n", sa.n)->required();
    s->add_option("--p", sa.p);
    s->add_option("--alpha", sa.alpha, "use p = n^-alpha");
    s->add_option("--seed", sa.seed);
    s->add_option("--trial", sa.trial);
    s->add_option("--out", sa.out);
    s->callback([&] { status = run_sample(sa); });

    DetectArgs de;
    auto* d = app.add_subcommand("detect", "Find induced (dominating) copies of W_a^gamma");
    d->add_option("--graph", de.graph)->required();
    d->add_option("--gamma", de.gamma)->required();
    d->add_option("--r", de.r)->required();
    d->add_option("--a", de.a);
    d->add_option("--a-max", de.a_max);
    d->add_option("--a-min", de.a_min);
    d->add_flag("--dominating", de.dominating);
    d->add_flag("--count", de.count, "count all labeled embeddings");
    d->add_option("--budget", de.budget, "node-expansion cap");
    d->callback([&] { status = run_detect(de); });

    ThresholdArgs th;
    auto* t = app.add_subcommand("thresholds", "Window report for one n");
    t->add_option("--alpha", th.alpha)->required();
    t->add_option("--gamma", th.gamma)->required();
    t->add_option("--r", th.r);
    t->add_option("--n", th.n)->required();
    t->add_option("--mode", th.mode)->check(CLI::IsMember({"part1", "part2"}));
    t->add_option("--window", th.window, "part 1: wide or narrow")->check(CLI::IsMember({"wide", "narrow"}));
    t->add_option("--beta", th.beta);
    t->add_option("--epsilon", th.epsilon);
    t->callback([&] { status = run_thresholds(th); });

    SequenceArgs sq;
    auto* q = app.add_subcommand("sequences", "Witness sequences n_i, m_i with certificates (CSV)");
    q->add_option("--mode", sq.mode)->check(CLI::IsMember({"part1", "part2"}));
    q->add_option("--i-min", sq.i_min);
    q->add_option("--i-max", sq.i_max)->required();
    q->add_option("--alpha", sq.alpha);
    q->add_option("--gamma", sq.gamma);
    q->add_option("--r", sq.r);
    q->add_option("--beta", sq.beta);
    q->add_option("--epsilon", sq.epsilon);
    q->add_option("--C1", sq.C1);
    q->add_option("--C2", sq.C2);
    q->add_option("--C", sq.C);
    q->add_option("--c", sq.c);
    q->callback([&] { status = run_sequences(sq); });

    ExperimentArgs ex;
    auto* x = app.add_subcommand("experiment", "Monte Carlo estimate of dominating W copies (CSV)");
    x->add_option("--config", ex.config)->required();
    x->add_option("--out", ex.out);
    x->add_option("--workers", ex.workers);
    x->callback([&] { status = run_experiment_cmd(ex); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? 0 : kExitInput;
    } catch (const emso::BudgetExceeded& err) {
        std::cerr << "emso: " << err.what() << '\n';
        return kExitBudget;
    } catch (const emso::ParseError& err) {
        std::cerr << "emso: formula parse error " << err.what() << '\n';
        return kExitInput;
    } catch (const emso::InvalidArgument& err) {
        std::cerr << "emso: " << err.what() << '\n';
        return kExitInput;
    } catch (const std::exception& err) {
        std::cerr << "emso: " << err.what() << '\n';
        return kExitRuntime;
    }
    return status;
}
