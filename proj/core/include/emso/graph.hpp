#pragma once

#include "emso/error.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace emso {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Membership flags over the vertices 0..universe-1 of some host graph.
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet all(std::size_t universe);
    /// Sets with universe <= 64 built directly from a bit mask.
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

    [[nodiscard]] std::size_t universe() const noexcept { return universe_; }
    [[nodiscard]] bool contains(Vertex v) const noexcept
    {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);
    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return size() == 0; }
    [[nodiscard]] std::vector<Vertex> members() const;
    [[nodiscard]] bool intersects(const VertexSet& other) const noexcept;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Adjacency is stored as sorted CSR neighbour lists; graphs of moderate
/// order additionally keep a bit matrix so that adjacency tests are O(1).
/// Immutable after construction.
class Graph
{
public:
    Graph() = default;

    /// Builds a graph with exactly the given edges (duplicates collapse).
    /// Throws InvalidArgument on self-loops or endpoints outside 0..n-1.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges);

    static Graph complete(std::size_t n);
    static Graph path(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph star(std::size_t leaves);

    [[nodiscard]] std::size_t order() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return m_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const noexcept
    {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
    [[nodiscard]] Graph induced(std::span<const Vertex> vertices) const;

    /// Copy of this graph with `extra` isolated vertices appended.
    [[nodiscard]] Graph with_isolated(std::size_t extra) const;

    /// Relabelled copy: vertex v becomes perm[v].
    [[nodiscard]] Graph permuted(std::span<const Vertex> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept
    {
        return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
    }

private:
    static constexpr std::size_t kDenseLimit = 4096;

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adj_;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> matrix_;
};

/// Incremental edge collection used by constructions that grow a graph.
class GraphBuilder
{
public:
    GraphBuilder() = default;
    explicit GraphBuilder(std::size_t n) : n_(n) {}

    Vertex add_vertex() { return static_cast<Vertex>(n_++); }
    void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
    /// Adds a path u - x_1 - ... - x_k - v with k fresh inner vertices and
    /// returns the inner vertices.
    std::vector<Vertex> add_path(Vertex u, Vertex v, std::size_t inner);

    [[nodiscard]] std::size_t order() const noexcept { return n_; }
    [[nodiscard]] Graph build() const { return Graph(n_, edges_); }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// True iff every vertex outside `s` has at least one neighbour in `s`.
[[nodiscard]] bool is_dominating(const Graph& g, const VertexSet& s);

/// Parses the canonical edge-list text: a header line "n m" followed by m
/// lines "u v". Throws InvalidArgument with a line number on malformed input.
[[nodiscard]] Graph read_edge_list(std::string_view text);

/// Canonical form: header "n m", then one "u v" line per edge with u < v,
/// sorted lexicographically. Every line ends in '\n'.
[[nodiscard]] std::string write_edge_list(const Graph& g);

[[nodiscard]] Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

} // namespace emso
