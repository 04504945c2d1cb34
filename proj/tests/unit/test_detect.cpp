#include "emso/detect.hpp"
#include "emso/random.hpp"
#include "emso/search.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace emso;

namespace {

bool brute_dominating_k(const Graph& g, std::size_t k)
{
    const auto n = g.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) == k && oracle::dominates(g, mask)) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("counts of induced W agree with exhaustive enumeration")
{
    for (std::size_t gamma : {0, 1}) {
        for (std::size_t a : {1, 2}) {
            WitnessParams p{a, gamma, 2};
            auto pattern = build_W(p).graph;
            for (std::uint64_t seed = 1; seed <= 8; ++seed) {
                auto host = oracle::random_graph(pattern.order() + 2, 0.4, seed);
                CAPTURE(gamma);
                CAPTURE(a);
                CAPTURE(seed);
                auto expected = oracle::induced_embeddings(pattern, host).size();
                auto got = find_induced_W(host, p, SearchMode::CountAll);
                CHECK(got.count == expected);
                CHECK(got.outcome == (expected > 0 ? Outcome::Found : Outcome::None));
                if (got.embedding) {
                    CHECK(is_induced_embedding(pattern, host, got.embedding->image));
                }
            }
        }
    }
}

TEST_CASE("W inside itself and a relabelled copy")
{
    WitnessParams p{2, 1, 3};
    auto w = build_W(p);
    auto n = w.graph.order();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::reverse(perm.begin(), perm.end());
    auto host = w.graph.permuted(perm).with_isolated(3);
    auto found = find_induced_W(host, p);
    REQUIRE(found.outcome == Outcome::Found);
    CHECK(is_induced_embedding(w.graph, host, found.embedding->image));
    auto all = find_induced_W(w.graph, p, SearchMode::CountAll);
    CHECK(all.count == automorphism_count(w.graph));
}

TEST_CASE("dominating detection")
{
    WitnessParams p{2, 0, 2};
    auto w = build_W(p);
    auto n = w.graph.order();
    auto res = find_dominating_induced_W(w.graph, 0, 2, 1, 2);
    REQUIRE(res.outcome == Outcome::Found);
    CHECK(res.a == 2);

    // An extra vertex hanging off an F1 vertex is dominated; an isolated one is not.
    std::vector<Edge> edges = w.graph.edges();
    edges.emplace_back(w.f1_order.front(), static_cast<Vertex>(n));
    Graph pendant(n + 1, edges);
    auto res2 = find_dominating_induced_W(pendant, 0, 2, 2, 2);
    CHECK(res2.outcome == Outcome::Found);
    CHECK(find_dominating_induced_W(w.graph.with_isolated(1), 0, 2, 1, 2).outcome == Outcome::None);
    CHECK_THROWS_AS((void)find_dominating_induced_W(w.graph, 0, 2, 3, 2), InvalidArgument);
}

TEST_CASE("budget is reported, not thrown")
{
    auto host = oracle::random_graph(30, 0.5, 3);
    auto res = find_induced_W(host, {2, 0, 3}, SearchMode::CountAll, {50});
    CHECK(res.outcome == Outcome::BudgetExceeded);
    CHECK(res.expansions > 50);
    CHECK(outcome_name(res.outcome) == "budget_exceeded");
}

TEST_CASE("exact domination and sampling")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = oracle::random_graph(9, 0.3, seed);
        for (std::size_t k = 1; k <= 4; ++k) {
            CAPTURE(seed);
            CAPTURE(k);
            CHECK(exists_dominating_set_exact(g, k) == brute_dominating_k(g, k));
        }
    }
    CHECK_THROWS_AS((void)exists_dominating_set_exact(oracle::random_graph(30, 0.05, 1), 5, {100}),
                    BudgetExceeded);

    // Star on 5 leaves: a random 1-subset dominates iff it is the centre.
    auto est = dominating_set_fraction(Graph::star(5), 1, 6000, 3);
    CHECK(est.trials == 6000);
    CHECK(est.ci_low < 1.0 / 6.0);
    CHECK(est.ci_high > 1.0 / 6.0);
    CHECK(dominating_set_fraction(Graph::complete(5), 1, 100, 1).p_hat == 1.0);
}

TEST_CASE("connector property")
{
    // Two vertices of V joined through one outside vertex.
    Graph g(3, {{0, 2}, {1, 2}});
    VertexSet v(3, {0, 1});
    CHECK(check_connector_property(g, v, 0));
    CHECK_FALSE(check_connector_property(g, v, 1));
    // With gamma = 1 the path has two vertices: 0 - 2 - 3 - 1.
    Graph h(4, {{0, 2}, {2, 3}, {3, 1}});
    CHECK(check_connector_property(h, VertexSet(4, {0, 1}), 1));
    CHECK_FALSE(check_connector_property(h, VertexSet(4, {0, 1}), 0));
    // The connector must not see any other V vertex.
    Graph k(4, {{0, 3}, {1, 3}, {2, 3}});
    CHECK_FALSE(check_connector_property(k, VertexSet(4, {0, 1, 2}), 0));
    // A single vertex has no pairs to connect.
    CHECK(check_connector_property(Graph(1, {}), VertexSet(1, {0}), 0));
}
