#pragma once

#include "emso/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace emso {

enum class Role : std::uint8_t { F1, F2, TF1, TF2, Connector };

[[nodiscard]] std::string_view role_name(Role role) noexcept;
[[nodiscard]] Role parse_role(std::string_view name);

/// Sidecar text: one "vertex role" line per vertex, in vertex order.
[[nodiscard]] std::string write_roles(const std::vector<Role>& roles);
[[nodiscard]] std::vector<Role> read_roles(std::string_view text, std::size_t n);

struct RootedTree
{
    Graph graph;
    Vertex root = 0;
};

/// A graph with a linear order on its vertices; order.front() is the minimum.
struct OrderedGraph
{
    Graph graph;
    std::vector<Vertex> order;
};

enum class ConnectorKind : std::uint8_t { F1F2, F2TF1, TF1TF2, Generic };

/// A P_{gamma+2} joining `from` and `to` through `inner`.
struct ConnectorPath
{
    Vertex from = 0;
    Vertex to = 0;
    std::vector<Vertex> inner;
    ConnectorKind kind = ConnectorKind::Generic;
};

/// Result of a (plain or ordered) gamma-product. Vertices of the first
/// factor keep their ids, those of the second are shifted by its order, and
/// connector inner vertices follow.
struct Product
{
    Graph graph;
    std::vector<ConnectorPath> connectors;
};

/// Joins every pair of equal-depth vertices by a path with `gamma` inner
/// vertices. Throws InvalidArgument if either factor is not a tree.
[[nodiscard]] Product gamma_product(const RootedTree& f1, const RootedTree& f2, std::size_t gamma);

/// Like gamma_product, with the distance from the minimum taken along the
/// linear orders: vertex order[k] of each factor is at distance k.
[[nodiscard]] Product ordered_gamma_product(const OrderedGraph& f1, const OrderedGraph& f2, std::size_t gamma);

struct WitnessParams
{
    std::size_t a = 1;
    std::size_t gamma = 0;
    std::size_t r = 4;

    void validate() const;
};

struct WitnessGraph
{
    Graph graph;
    std::vector<Role> roles;
    Vertex r1 = 0;
    Vertex r2 = 0;
    std::optional<Vertex> tr1;
    std::optional<Vertex> tr2;
    std::vector<Vertex> f1_order;
    std::vector<Vertex> tf1_order;
    std::vector<std::vector<Vertex>> f2_levels;
    std::vector<std::vector<Vertex>> tf2_levels;
    std::vector<ConnectorPath> connectors;

    [[nodiscard]] std::vector<Vertex> vertices_with(Role role) const;
};

/// (r^a - 1)/(r - 1). Throws InvalidArgument if r < 2 or the value
/// overflows 64 bits.
[[nodiscard]] std::uint64_t omega(std::uint64_t r, std::uint64_t a);
/// As omega, but empty instead of throwing on overflow.
[[nodiscard]] std::optional<std::uint64_t> omega_checked(std::uint64_t r, std::uint64_t a) noexcept;

[[nodiscard]] std::uint64_t w_vertex_count(const WitnessParams& p);
[[nodiscard]] std::uint64_t w_edge_count(const WitnessParams& p);
/// V_{gamma,r}(a) and E_{gamma,r}(a); empty on 64-bit overflow.
[[nodiscard]] std::optional<std::uint64_t> w_star_vertex_count(const WitnessParams& p) noexcept;
[[nodiscard]] std::optional<std::uint64_t> w_star_edge_count(const WitnessParams& p) noexcept;

[[nodiscard]] WitnessGraph build_W(const WitnessParams& p);

inline constexpr std::uint64_t kDefaultWitnessVertexBudget = 5'000'000;

/// Throws InvalidArgument when V_{gamma,r}(a) exceeds
/// `max_vertices`.
[[nodiscard]] WitnessGraph build_W_star(const WitnessParams& p,
                                        std::uint64_t max_vertices = kDefaultWitnessVertexBudget);

} // namespace emso
