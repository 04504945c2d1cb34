#include "emso/error.hpp"
#include "emso/search.hpp"
#include "emso/witness.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <queue>

using namespace emso;

namespace {

// Depths from `root` by BFS; -1 when unreachable.
std::vector<int> bfs_depths(const Graph& g, Vertex root)
{
    std::vector<int> d(g.order(), -1);
    std::queue<Vertex> q;
    d[root] = 0;
    q.push(root);
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (auto w : g.neighbors(u)) {
            if (d[w] < 0) {
                d[w] = d[u] + 1;
                q.push(w);
            }
        }
    }
    return d;
}

bool is_perfect_tree(const Graph& t, Vertex root, std::size_t r)
{
    if (t.edge_count() + 1 != t.order()) {
        return false;
    }
    auto d = bfs_depths(t, root);
    if (std::find(d.begin(), d.end(), -1) != d.end()) {
        return false;
    }
    int leaf_depth = *std::max_element(d.begin(), d.end());
    for (Vertex v = 0; v < t.order(); ++v) {
        std::size_t children = t.degree(v) - (v == root ? 0 : 1);
        if (d[v] == leaf_depth ? children != 0 : children != r) {
            return false;
        }
    }
    return true;
}

bool is_path(const Graph& g)
{
    if (g.order() == 0) {
        return false;
    }
    if (g.edge_count() + 1 != g.order()) {
        return false;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 2) {
            return false;
        }
    }
    auto d = bfs_depths(g, 0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

Graph part(const WitnessGraph& w, Role role)
{
    auto vs = w.vertices_with(role);
    return w.graph.induced(vs);
}

std::size_t local_index(const WitnessGraph& w, Role role, Vertex v)
{
    auto vs = w.vertices_with(role);
    return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
}

// Theta graph: two poles joined by `paths` internally disjoint paths with
// `inner` inner vertices each.
Graph theta(std::size_t paths, std::size_t inner)
{
    GraphBuilder b(2);
    for (std::size_t i = 0; i < paths; ++i) {
        b.add_path(0, 1, inner);
    }
    return b.build();
}

} // namespace

TEST_CASE("omega")
{
    CHECK(omega(4, 0) == 0);
    CHECK(omega(4, 1) == 1);
    CHECK(omega(4, 2) == 5);
    CHECK(omega(4, 3) == 21);
    CHECK(omega(2, 3) == 7);
    CHECK(omega(2, 63) == (std::uint64_t{1} << 63) - 1);
    CHECK_FALSE(omega_checked(2, 65).has_value());
    CHECK_THROWS_AS((void)omega(2, 65), InvalidArgument);
    CHECK_THROWS_AS((void)omega(1, 3), InvalidArgument);
}

TEST_CASE("gamma product examples")
{
    RootedTree single{Graph(1, {}), 0};
    auto k2 = gamma_product(single, single, 0);
    CHECK(k2.graph.order() == 2);
    CHECK(k2.graph.edge_count() == 1);

    auto p4 = gamma_product(single, single, 2);
    CHECK(p4.graph.order() == 4);
    CHECK(are_isomorphic(p4.graph, Graph::path(4)));
    REQUIRE(p4.connectors.size() == 1);
    CHECK(p4.connectors[0].inner.size() == 2);

    // Depth-matched pairs: path 0-1-2 rooted at 0 against a star rooted at
    // its centre pairs (0,c), (1,l) for each of 3 leaves.
    RootedTree path3{Graph::path(3), 0};
    RootedTree star{Graph::star(3), 0};
    auto prod = gamma_product(path3, star, 1);
    CHECK(prod.connectors.size() == 4);
    CHECK(prod.graph.order() == 3 + 4 + 4);
    CHECK(prod.graph.edge_count() == 2 + 3 + 4 * 2);

    RootedTree cyc{Graph::cycle(3), 0};
    CHECK_THROWS_AS((void)gamma_product(cyc, single, 0), InvalidArgument);
}

TEST_CASE("ordered gamma product pairs by rank in the linear order")
{
    OrderedGraph f1{Graph::path(5), {0, 1, 2, 3, 4}};
    OrderedGraph f2{Graph::star(2), {0, 1, 2}};
    auto prod = ordered_gamma_product(f1, f2, 0);
    REQUIRE(prod.connectors.size() == 3);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& c : prod.connectors) {
        pairs.emplace_back(c.from, c.to);
    }
    std::sort(pairs.begin(), pairs.end());
    // Second factor shifted by 5.
    CHECK(pairs == std::vector<std::pair<Vertex, Vertex>>{{0, 5}, {1, 6}, {2, 7}});

    // Linear orders that coincide with rooted P2 give the plain product.
    OrderedGraph a{Graph::path(2), {0, 1}};
    auto ordered = ordered_gamma_product(a, a, 1);
    auto plain = gamma_product({Graph::path(2), 0}, {Graph::path(2), 0}, 1);
    CHECK(are_isomorphic(ordered.graph, plain.graph));

    OrderedGraph bad{Graph::path(3), {0, 1}};
    CHECK_THROWS_AS((void)ordered_gamma_product(bad, a, 0), InvalidArgument);
}

TEST_CASE("build_W examples")
{
    auto k2 = build_W({1, 0, 4});
    CHECK(k2.graph.order() == 2);
    CHECK(k2.graph.edge_count() == 1);
    auto w20 = build_W({2, 0, 4});
    CHECK(w20.graph.order() == 7);
    CHECK(w20.graph.edge_count() == 10);
    auto w22 = build_W({2, 2, 4});
    CHECK(w22.graph.order() == 17);
    CHECK(w22.graph.edge_count() == 20);
    CHECK(are_isomorphic(build_W({1, 3, 4}).graph, Graph::path(5)));
}

TEST_CASE("count identities and structure of W")
{
    for (std::size_t r : {2, 3, 4}) {
        for (std::size_t a = 1; a <= 5; ++a) {
            for (std::size_t gamma = 0; gamma <= 3; ++gamma) {
                WitnessParams p{a, gamma, r};
                auto w = build_W(p);
                const std::uint64_t s = a + (gamma + 1) * omega(r, a);
                CHECK(w.graph.order() == s);
                CHECK(w_vertex_count(p) == s);
                // (gamma+2)s/(gamma+1) - a/(gamma+1) - 2, kept integral.
                REQUIRE(((gamma + 2) * s - a) % (gamma + 1) == 0);
                const std::uint64_t e = ((gamma + 2) * s - a) / (gamma + 1) - 2;
                CHECK(w.graph.edge_count() == e);
                CHECK(w_edge_count(p) == e);

                CHECK(is_path(part(w, Role::F1)));
                auto f2 = part(w, Role::F2);
                CHECK(f2.order() == omega(r, a));
                CHECK(is_perfect_tree(f2, static_cast<Vertex>(local_index(w, Role::F2, w.r2)), r));
                CHECK(w.connectors.size() == omega(r, a));
                for (auto v : w.vertices_with(Role::Connector)) {
                    CHECK(w.graph.degree(v) == 2);
                }
                // Each connector joins equal-depth vertices.
                auto d1 = bfs_depths(part(w, Role::F1), static_cast<Vertex>(local_index(w, Role::F1, w.r1)));
                auto d2 = bfs_depths(f2, static_cast<Vertex>(local_index(w, Role::F2, w.r2)));
                for (const auto& c : w.connectors) {
                    CHECK(c.inner.size() == gamma);
                    CHECK(d1[local_index(w, Role::F1, c.from)] == d2[local_index(w, Role::F2, c.to)]);
                }
            }
        }
    }
}

TEST_CASE("count identities of W*")
{
    for (std::size_t r : {2, 3}) {
        for (std::size_t a = 1; a <= 2; ++a) {
            for (std::size_t gamma = 0; gamma <= 3; ++gamma) {
                WitnessParams p{a, gamma, r};
                auto w = build_W_star(p);
                const std::uint64_t wa = omega(r, a);
                const std::uint64_t waa = omega(r, wa);
                const std::uint64_t v = a + 2 * (gamma + 1) * wa + (gamma + 1) * waa;
                const std::uint64_t e = a + 2 * (gamma + 2) * wa + (gamma + 2) * waa - 4;
                CHECK(w.graph.order() == v);
                CHECK(w.graph.edge_count() == e);
                CHECK(w_star_vertex_count(p) == v);
                CHECK(w_star_edge_count(p) == e);
                CHECK(is_path(part(w, Role::F1)));
                CHECK(is_path(part(w, Role::TF1)));
                CHECK(part(w, Role::TF1).order() == wa);
                CHECK(part(w, Role::TF2).order() == waa);
                for (auto c : w.vertices_with(Role::Connector)) {
                    CHECK(w.graph.degree(c) == 2);
                }
            }
        }
    }
    CHECK(w_star_vertex_count({2, 2, 4}) == 1055);
    CHECK(w_star_edge_count({2, 2, 4}) == 1402);
    auto big = build_W_star({2, 2, 4});
    CHECK(big.graph.order() == 1055);
    CHECK(big.graph.edge_count() == 1402);
    auto first = build_W_star({1, 2, 4});
    CHECK(are_isomorphic(first.graph, Graph::path(10)));
    CHECK_THROWS_AS((void)build_W_star({3, 0, 4}, 1000), InvalidArgument);
    CHECK_FALSE(w_star_vertex_count({5, 0, 4}).has_value());
}

TEST_CASE("W_2 is a theta graph with 240 automorphisms")
{
    // Two poles (F2 root and v2) joined by r+1 paths, which gives
    // 2 (r+1)! automorphisms rather than r!.
    for (std::size_t gamma = 0; gamma <= 2; ++gamma) {
        auto w = build_W({2, gamma, 4});
        auto th = theta(5, gamma + 1);
        CHECK(are_isomorphic(w.graph, th));
        CHECK(automorphism_count(w.graph) == 240);
    }
    auto w = build_W({2, 0, 4});
    CHECK(oracle::automorphisms(w.graph) == 240);
    CHECK(oracle::induced_embeddings(w.graph, w.graph).size() == 240);
}

TEST_CASE("roles sidecar")
{
    auto w = build_W_star({1, 1, 2});
    auto text = write_roles(w.roles);
    CHECK(text.rfind("0 F1\n", 0) == 0);
    CHECK(read_roles(text, w.graph.order()) == w.roles);
    CHECK(role_name(Role::Connector) == "CONNECTOR");
    CHECK(parse_role("TF2") == Role::TF2);
    CHECK_THROWS_AS((void)parse_role("X"), InvalidArgument);
    CHECK_THROWS_AS((void)read_roles("0 F1\n", 2), InvalidArgument);
    CHECK_THROWS_AS((void)read_roles("zero F1\n", 1), InvalidArgument);
    CHECK_THROWS_AS((void)read_roles("5 F1\n", 1), InvalidArgument);
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS((void)build_W({0, 0, 4}), InvalidArgument);
    CHECK_THROWS_AS((void)build_W({1, 0, 1}), InvalidArgument);
}
