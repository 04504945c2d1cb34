#include "emso/error.hpp"
#include "emso/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace emso;

TEST_CASE("vertex sets")
{
    VertexSet s(130, {0, 64, 129});
    CHECK(s.size() == 3);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(63));
    CHECK_FALSE(s.contains(500));
    s.erase(64);
    s.insert(5);
    CHECK(s.members() == std::vector<Vertex>{0, 5, 129});
    CHECK(VertexSet::all(70).size() == 70);
    CHECK(VertexSet::from_mask(10, 0b1010).members() == std::vector<Vertex>{1, 3});
    CHECK(s.intersects(VertexSet(130, {129})));
    CHECK_FALSE(s.intersects(VertexSet(130, {1, 2})));
    CHECK_THROWS_AS(s.insert(130), InvalidArgument);
    CHECK_THROWS_AS(VertexSet::from_mask(65, 1), InvalidArgument);
}

TEST_CASE("construction and queries")
{
    auto g = oracle::make(4, {{0, 1}, {1, 2}, {2, 1}, {3, 0}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    CHECK_THROWS_AS(oracle::make(3, {{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(oracle::make(3, {{0, 3}}), InvalidArgument);

    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK(Graph::path(5).edge_count() == 4);
    CHECK(Graph::cycle(5).edge_count() == 5);
    CHECK(Graph::star(4).order() == 5);
    CHECK(Graph::star(4).degree(0) == 4);
    CHECK(Graph().order() == 0);
}

TEST_CASE("induced, isolated, permuted")
{
    auto c = Graph::cycle(6);
    std::vector<Vertex> keep{0, 1, 2, 4};
    auto h = c.induced(keep);
    CHECK(h.order() == 4);
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(c.with_isolated(3).order() == 9);
    CHECK(c.with_isolated(3).edge_count() == 6);

    std::vector<Vertex> perm{5, 4, 3, 2, 1, 0};
    auto p = Graph::path(6).permuted(perm);
    CHECK(p.adjacent(5, 4));
    CHECK(p.adjacent(1, 0));
    CHECK_FALSE(p.adjacent(5, 0));
}

TEST_CASE("large graphs use lists without the dense matrix")
{
    const std::size_t n = 5000;
    auto g = Graph::path(n);
    CHECK(g.adjacent(4998, 4999));
    CHECK_FALSE(g.adjacent(0, 4999));
}

TEST_CASE("domination matches the brute-force oracle")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = oracle::random_graph(8, 0.3, seed);
        for (std::uint64_t mask = 0; mask < 256; ++mask) {
            REQUIRE(is_dominating(g, VertexSet::from_mask(8, mask)) == oracle::dominates(g, mask));
        }
    }
}

TEST_CASE("edge list round trip is canonical")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = oracle::random_graph(12, 0.4, seed);
        auto text = write_edge_list(g);
        auto back = read_edge_list(text);
        CHECK(back == g);
        CHECK(write_edge_list(back) == text);
    }
    // Unsorted input with blank lines and CRLF reads to the same graph.
    auto g = read_edge_list("3 2\r\n\n2 1\r\n1 0\n");
    CHECK(write_edge_list(g) == "3 2\n0 1\n1 2\n");
    CHECK(read_edge_list("0 0\n").order() == 0);
}

TEST_CASE("edge list errors carry line numbers")
{
    auto message = [](const char* text) {
        try {
            (void)read_edge_list(text);
        } catch (const InvalidArgument& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("") .find("empty") != std::string::npos);
    CHECK(message("3\n").find("line 1") != std::string::npos);
    CHECK(message("3 1\n0 x\n").find("line 2") != std::string::npos);
    CHECK(message("3 1\n0 3\n").find("out of range") != std::string::npos);
    CHECK(message("3 1\n\n2 2\n").find("line 3") != std::string::npos);
    CHECK(message("3 2\n0 1\n").find("declares 2") != std::string::npos);
    CHECK(message("3 1\n0 1 2\n").find("line 2") != std::string::npos);
}
