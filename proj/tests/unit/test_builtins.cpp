#include "emso/builtins.hpp"
#include "emso/witness.hpp"

#include <doctest.h>

#include <array>

using namespace emso;

namespace {

VertexSet with_role(const WitnessGraph& w, Role role)
{
    auto vs = w.vertices_with(role);
    return VertexSet(w.graph.order(), std::span<const Vertex>(vs));
}

} // namespace

TEST_CASE("isoW recognises W and rejects near misses")
{
    for (std::size_t gamma : {0, 1}) {
        for (std::size_t a : {1, 2}) {
            auto w = build_W({a, gamma, 2});
            auto n = w.graph.order();
            CHECK(builtin_isoW(w.graph, VertexSet::all(n), gamma, 2));
            auto fewer = VertexSet::all(n);
            fewer.erase(static_cast<Vertex>(n - 1));
            CHECK_FALSE(builtin_isoW(w.graph, fewer, gamma, 2));
        }
    }
    // Same vertex count as W_1 with gamma = 1 (a path on 3 vertices) but a triangle.
    CHECK_FALSE(builtin_isoW(Graph::complete(3), VertexSet::all(3), 1, 2));
    CHECK(builtin_isoW(Graph::path(3), VertexSet::all(3), 1, 2));
    CHECK_FALSE(builtin_isoW(Graph::path(3), VertexSet(3), 1, 2));
}

TEST_CASE("isoWroles needs the right colour classes")
{
    auto w = build_W({2, 1, 2});
    auto f1 = with_role(w, Role::F1);
    auto f2 = with_role(w, Role::F2);
    auto c = with_role(w, Role::Connector);
    CHECK(builtin_isoW_roles(w.graph, f1, f2, c, 1, 2));
    CHECK_FALSE(builtin_isoW_roles(w.graph, f2, f1, c, 1, 2));
    CHECK_FALSE(builtin_isoW_roles(w.graph, f1, f2, c, 0, 2));
    CHECK_FALSE(builtin_isoW_roles(w.graph, f1, f1, c, 1, 2));
}

TEST_CASE("phistar pairs the two sides through P_{gamma+2}")
{
    // 0-1-2 and 3-4-5 with X1 = {0,3}, X2 = {2,5}, C = {1,4}.
    Graph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    VertexSet x1(6, {0, 3});
    VertexSet x2(6, {2, 5});
    VertexSet c(6, {1, 4});
    CHECK(builtin_phi_star(g, x1, x2, c, 1));
    CHECK_FALSE(builtin_phi_star(g, x1, x2, c, 2));

    Graph crossed(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}});
    CHECK_FALSE(builtin_phi_star(crossed, x1, x2, c, 1));

    // Both paths land on the same X2 vertex.
    Graph shared(6, {{0, 1}, {1, 2}, {3, 4}, {4, 2}});
    CHECK_FALSE(builtin_phi_star(shared, x1, VertexSet(6, {2, 5}), c, 1));

    // gamma = 0 is a perfect matching between the sides.
    Graph matching(4, {{0, 2}, {1, 3}});
    CHECK(builtin_phi_star(matching, VertexSet(4, {0, 1}), VertexSet(4, {2, 3}), VertexSet(4), 0));
    Graph extra(4, {{0, 2}, {1, 3}, {0, 3}});
    CHECK_FALSE(builtin_phi_star(extra, VertexSet(4, {0, 1}), VertexSet(4, {2, 3}), VertexSet(4), 0));
}

TEST_CASE("last, leaves, even, disjoint, edges")
{
    // Path X = 0-1, y = 2 hangs off 1, Z = {3, 4} adjacent to y.
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    VertexSet x(5, {0, 1});
    VertexSet z(5, {3, 4});
    CHECK(builtin_last(g, x, z, 2, VertexSet(5), 0));
    CHECK_FALSE(builtin_last(g, x, z, 3, VertexSet(5), 0));
    CHECK_FALSE(builtin_last(g, x, VertexSet(5, {0}), 2, VertexSet(5), 0));

    // With gamma = 1: y = 2, C = {3}, Z = {4}, 2-3-4.
    Graph h(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(builtin_last(h, x, VertexSet(5, {4}), 2, VertexSet(5, {3}), 1));
    CHECK_FALSE(builtin_last(h, x, VertexSet(5, {4}), 2, VertexSet(5, {3}), 2));

    // Leaves of the path 0-1-2 attached at most r per vertex.
    Graph t(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    VertexSet px(5, {0, 1, 2});
    CHECK(builtin_leaves(t, px, VertexSet(5, {3, 4}), 2));
    CHECK_FALSE(builtin_leaves(t, px, VertexSet(5, {3, 4}), 1));
    Graph t2(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK_FALSE(builtin_leaves(t2, px, VertexSet(5, {3, 4}), 2));

    CHECK(builtin_even(g, VertexSet(5, {0, 1})));
    CHECK_FALSE(builtin_even(g, VertexSet(5, {0, 1, 2})));
    CHECK(builtin_even(g, VertexSet(5)));

    std::array<VertexSet, 3> parts{VertexSet(5, {0}), VertexSet(5, {1, 2}), VertexSet(5, {3})};
    CHECK(builtin_disjoint(parts));
    CHECK_FALSE(builtin_edges(g, parts));
    std::array<VertexSet, 2> apart{VertexSet(5, {0}), VertexSet(5, {3, 4})};
    CHECK(builtin_edges(g, apart));
    std::array<VertexSet, 2> overlap{VertexSet(5, {0, 1}), VertexSet(5, {1})};
    CHECK_FALSE(builtin_disjoint(overlap));
}

TEST_CASE("max is domination")
{
    auto g = Graph::star(4);
    CHECK(builtin_max(g, VertexSet(5, {0})));
    CHECK_FALSE(builtin_max(g, VertexSet(5, {1})));
}

TEST_CASE("registry")
{
    for (const char* name : {"max", "isoW", "isoWroles", "phistar", "paths", "last", "leaves", "even", "disjoint",
                             "edges", "max2"}) {
        CHECK(find_builtin(name).has_value());
    }
    CHECK_FALSE(find_builtin("nope").has_value());
    const auto& iso = builtin_registry()[*find_builtin("isoW")];
    CHECK(iso.defaults.at("gamma") == 0);
    CHECK(iso.defaults.at("r") == 4);
    const auto& m2 = builtin_registry()[*find_builtin("max2")];
    CHECK(m2.args.size() == 17);
    CHECK(builtin_registry()[*find_builtin("disjoint")].variadic);
}
