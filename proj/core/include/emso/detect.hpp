#pragma once

#include "emso/graph.hpp"
#include "emso/search.hpp"
#include "emso/stats.hpp"
#include "emso/witness.hpp"

#include <cstdint>
#include <optional>

namespace emso {

enum class Outcome : std::uint8_t { Found, None, BudgetExceeded };
enum class SearchMode : std::uint8_t { FindFirst, CountAll };

[[nodiscard]] std::string_view outcome_name(Outcome o) noexcept;

struct DetectionResult
{
    Outcome outcome = Outcome::None;
    /// Pattern vertex (numbered as in build_W) -> host vertex.
    std::optional<Embedding> embedding;
    std::size_t a = 0;
    /// Labeled embeddings seen; complete only in CountAll mode.
    std::uint64_t count = 0;
    std::uint64_t expansions = 0;
    double elapsed_ms = 0.0;
};

/// Induced copies of W_a^gamma in g. The F2 root is matched first, then
/// the tree level by level, then every connector walked from its F2 end,
/// which also places the F1 vertices. a = 1 uses an induced-path search.
/// Budget exhaustion is reported through the outcome, not thrown.
[[nodiscard]] DetectionResult find_induced_W(const Graph& g, const WitnessParams& p,
                                             SearchMode mode = SearchMode::FindFirst, SearchBudget budget = {});

/// Tries a = a_max down to a_min and returns the first induced copy whose
/// vertex set dominates g. The budget is shared by all a.
[[nodiscard]] DetectionResult find_dominating_induced_W(const Graph& g, std::size_t gamma, std::size_t r,
                                                        std::size_t a_min, std::size_t a_max,
                                                        SearchBudget budget = {});

/// Exact: some k-subset dominates g. Each subset checked is one expansion;
/// throws BudgetExceeded.
[[nodiscard]] bool exists_dominating_set_exact(const Graph& g, std::size_t k, SearchBudget budget = {});

/// Fraction of uniformly random k-subsets that dominate g.
[[nodiscard]] ProportionEstimate dominating_set_fraction(const Graph& g, std::size_t k, std::uint64_t samples,
                                                         std::uint64_t seed);

/// For every pair of distinct u, v in V: some induced path w_1..w_{gamma+1}
/// outside V whose only V-neighbour at w_1 is u, at w_{gamma+1} is v, and
/// whose inner vertices have no V-neighbours. With gamma = 0 the single
/// path vertex must have exactly {u, v} as V-neighbours. Throws
/// BudgetExceeded.
[[nodiscard]] bool check_connector_property(const Graph& g, const VertexSet& V, std::size_t gamma,
                                            SearchBudget budget = {});

} // namespace emso
