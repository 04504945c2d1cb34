#pragma once

#include "emso/graph.hpp"
#include "emso/search.hpp"
#include "emso/witness.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace emso {

enum class ProcessRule : std::uint8_t {
    Floor = 1,      // new F1 vertex v_{a+1}
    TreeLeaf = 2,   // new F2 leaf joined to v_{a+1}
    PathExtend = 3, // new TF1 vertex joined to the last F2 leaf
    TopLeaf = 4,    // new TF2 leaf joined to the TF1 end
};

/// The evolving (gamma, r) process graph. Vertices are numbered in order of
/// creation, so every earlier snapshot is an induced prefix of a later one.
class ProcessState
{
public:
    [[nodiscard]] std::size_t gamma() const noexcept { return gamma_; }
    [[nodiscard]] std::size_t r() const noexcept { return r_; }
    /// Number of steps applied since process_init.
    [[nodiscard]] std::size_t step() const noexcept { return step_; }
    /// Largest a with V_{gamma,r}(a) <= vertex_count().
    [[nodiscard]] std::size_t floor() const noexcept { return floor_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return roles_.size(); }
    [[nodiscard]] const std::vector<Role>& roles() const noexcept { return roles_; }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] Graph graph() const { return Graph(roles_.size(), edges_); }

    /// The rule the structural cursors select for the next step.
    [[nodiscard]] ProcessRule next_rule() const noexcept;
    [[nodiscard]] std::size_t cursor_j() const noexcept { return j_; }
    [[nodiscard]] std::size_t cursor_j0() const noexcept { return j0_; }

    /// Applies one step in place. Throws InvariantViolation when the
    /// vertex-count conditions do not single out the structural rule.
    void advance();

private:
    friend ProcessState process_init(std::size_t gamma, std::size_t r);

    Vertex add_vertex(Role role);
    void add_connector(Vertex u, Vertex v);

    std::size_t gamma_ = 0;
    std::size_t r_ = 2;
    std::size_t step_ = 0;
    std::size_t floor_ = 1;

    std::vector<Role> roles_;
    std::vector<Edge> edges_;

    std::vector<Vertex> f1_;
    std::vector<std::vector<Vertex>> f2_levels_;
    std::vector<Vertex> tf1_;
    std::vector<std::vector<Vertex>> tf2_levels_;

    // Cursors of the transition from floor a to a+1.
    ProcessRule next_ = ProcessRule::Floor;
    std::size_t j_ = 0;
    std::size_t j0_ = 0;
    Vertex last_tree_leaf_ = 0;
};

/// The 4-root path P_{3 gamma + 4} isomorphic to W*_1.
[[nodiscard]] ProcessState process_init(std::size_t gamma, std::size_t r);
[[nodiscard]] ProcessState process_step(const ProcessState& state);

/// Rules whose vertex-count condition holds for `state`; at most one is
/// expected.
[[nodiscard]] std::vector<ProcessRule> matching_rules(const ProcessState& state);

/// Largest a >= 1 with V_{gamma,r}(a) <= v (0 if v < V(1)).
[[nodiscard]] std::size_t floor_for_vertex_count(std::size_t gamma, std::size_t r, std::uint64_t v);

/// Bookkeeping value (gamma+1)(i+2)+a(i) stated alongside the process;
/// reported for diagnostics only.
[[nodiscard]] std::uint64_t bookkeeping_vertex_count(std::size_t gamma, std::size_t i, std::size_t floor);

struct GammaRTrace
{
    bool holds = false;
    /// When holds: the chain's final embedding (process vertex -> host
    /// vertex), its number of steps and its floor.
    Embedding embedding;
    std::size_t steps = 0;
    std::size_t floor = 0;
    std::uint64_t expansions = 0;
};

/// Decides whether `g` contains an induced process chain with even floor
/// that admits no induced one-step extension. Exhaustive; throws
/// BudgetExceeded when the total expansion count exceeds the budget.
[[nodiscard]] GammaRTrace has_gamma_r_property(const Graph& g, std::size_t gamma, std::size_t r,
                                               SearchBudget budget = {});

} // namespace emso
