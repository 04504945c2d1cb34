#pragma once

#include "emso/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace emso {

struct SearchBudget
{
    std::uint64_t max_expansions = 100'000'000;
};

/// image[p] is the host vertex assigned to pattern vertex p.
struct Embedding
{
    std::vector<Vertex> image;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Post-hoc validation: injective and preserves adjacency and non-adjacency.
[[nodiscard]] bool is_induced_embedding(const Graph& pattern, const Graph& host, std::span<const Vertex> image);

/// Backtracking enumerator of induced embeddings of `pattern` into `host`.
///
/// Pattern vertices are matched most-constrained first: every vertex after
/// the first of its component is chosen among the host neighbours of an
/// already-mapped pattern neighbour. Candidates are filtered by degree and,
/// if supplied, by vertex colours. Each candidate tried counts as one
/// expansion against the budget.
class InducedMatcher
{
public:
    using Visitor = std::function<bool(std::span<const Vertex>)>;

    /// Keeps references to both graphs.
    InducedMatcher(const Graph& pattern, const Graph& host, SearchBudget budget = {});
    InducedMatcher(Graph&&, const Graph&, SearchBudget = {}) = delete;
    InducedMatcher(const Graph&, Graph&&, SearchBudget = {}) = delete;

    /// Vertices only match when their colours agree. Both vectors must cover
    /// every vertex of their graph.
    void set_colors(std::vector<std::uint32_t> pattern_colors, std::vector<std::uint32_t> host_colors);

    /// Pins pattern vertex p to host vertex h. Pinned vertices are placed
    /// first, in the order given.
    void fix(Vertex p, Vertex h);

    /// Charges expansions to `counter` as well and enforces the budget
    /// against its running total, so nested searches share one cap.
    void share_counter(std::uint64_t* counter) noexcept { shared_ = counter; }

    /// Calls `visit` with each embedding found; stop early by returning
    /// false. Returns the number of embeddings visited. Throws
    /// BudgetExceeded when the expansion cap is hit.
    std::uint64_t run(const Visitor& visit);

    [[nodiscard]] std::uint64_t expansions() const noexcept { return expansions_; }

private:
    struct Step
    {
        Vertex pattern_vertex;
        std::optional<std::size_t> parent; // position of an earlier neighbour
        std::vector<std::size_t> adjacent_earlier; // positions of mapped pattern neighbours
    };

    void plan();
    bool extend(std::size_t depth, const Visitor& visit, std::uint64_t& found);
    bool compatible(std::size_t depth, Vertex h) const;

    const Graph& pattern_;
    const Graph& host_;
    SearchBudget budget_;
    std::vector<std::uint32_t> pattern_colors_;
    std::vector<std::uint32_t> host_colors_;
    std::vector<std::pair<Vertex, Vertex>> fixed_;
    std::vector<Step> steps_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
    std::uint64_t expansions_ = 0;
    std::uint64_t* shared_ = nullptr;
};

/// All (or the first `limit`, when nonzero) induced embeddings.
[[nodiscard]] std::vector<Embedding> induced_embeddings(const Graph& pattern, const Graph& host,
                                                        std::size_t limit = 0, SearchBudget budget = {});

[[nodiscard]] std::uint64_t count_induced_embeddings(const Graph& pattern, const Graph& host,
                                                     SearchBudget budget = {});

/// Stable colour refinement (1-dimensional Weisfeiler-Leman). Colours are
/// canonical: isomorphic graphs receive the same multiset of colours, and
/// refining graphs jointly keeps colours comparable across them.
[[nodiscard]] std::vector<std::uint32_t> color_refinement(const Graph& g);
[[nodiscard]] std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
joint_color_refinement(const Graph& a, const Graph& b);

/// |Aut(g)| by exhaustive enumeration of self-embeddings.
[[nodiscard]] std::uint64_t automorphism_count(const Graph& g, SearchBudget budget = {});

/// Some isomorphism a -> b, if one exists.
[[nodiscard]] std::optional<Embedding> find_isomorphism(const Graph& a, const Graph& b, SearchBudget budget = {});

[[nodiscard]] inline bool are_isomorphic(const Graph& a, const Graph& b, SearchBudget budget = {})
{
    return find_isomorphism(a, b, budget).has_value();
}

} // namespace emso
