#pragma once

#include "emso/graph.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace emso {

// Set predicates available to formulas as @name(...). Each depends only on
// the host graph and its arguments.

[[nodiscard]] bool builtin_max(const Graph& g, const VertexSet& x);

/// G[X] is isomorphic to W_a^gamma for some a >= 1.
[[nodiscard]] bool builtin_isoW(const Graph& g, const VertexSet& x, std::size_t gamma, std::size_t r);

/// G[X1 u X2 u C] is isomorphic to W_a^gamma by a map sending X1 onto F1,
/// X2 onto F2 and C onto the connector inner vertices.
[[nodiscard]] bool builtin_isoW_roles(const Graph& g, const VertexSet& x1, const VertexSet& x2, const VertexSet& c,
                                      std::size_t gamma, std::size_t r);

/// X1 u X2 u C is covered by disjoint P_{gamma+2} with one end in each of X1
/// and X2 and inner vertices in C, pairing X1 and X2 bijectively.
[[nodiscard]] bool builtin_phi_star(const Graph& g, const VertexSet& x1, const VertexSet& x2, const VertexSet& c,
                                    std::size_t gamma);

/// For every X1 vertex, the X2 vertices linked to it through C1 map
/// (through C2 links, one image each) onto a set inducing a path in TX1.
[[nodiscard]] bool builtin_paths(const Graph& g, const VertexSet& x1, const VertexSet& x2, const VertexSet& tx1,
                                 const VertexSet& c1, const VertexSet& c2, std::size_t gamma);

/// y hangs off an end of the path G[X]; C consists of P_gamma pieces whose
/// first vertices (and only those) touch y and whose last vertices each
/// have one Z-neighbour; every Z vertex has exactly one C-neighbour, a last
/// vertex. With gamma = 0, C is empty and every Z vertex is adjacent to y.
[[nodiscard]] bool builtin_last(const Graph& g, const VertexSet& x, const VertexSet& z, Vertex y, const VertexSet& c,
                                std::size_t gamma);

[[nodiscard]] bool builtin_leaves(const Graph& g, const VertexSet& x, const VertexSet& z, std::size_t r);

/// |X| is even. Meant for sets inducing a path.
[[nodiscard]] bool builtin_even(const Graph& g, const VertexSet& x);

[[nodiscard]] bool builtin_disjoint(std::span<const VertexSet> sets);

/// No edge joins vertices of two different listed sets.
[[nodiscard]] bool builtin_edges(const Graph& g, std::span<const VertexSet> sets);

struct Max2Args
{
    VertexSet x1, x2, tx1, tx2, ty1, ty2, z, tz;
    std::array<VertexSet, 7> c;
    Vertex y = 0;
    Vertex ty = 0;
};

/// The three maximality bullets of the (gamma, r)-property sentence.
[[nodiscard]] bool builtin_max2(const Graph& g, const Max2Args& args, std::size_t gamma, std::size_t r);

enum class ArgKind : std::uint8_t { Set, Vertex };

struct BuiltinSpec
{
    using Eval = std::function<bool(const Graph&, std::span<const VertexSet>, std::span<const Vertex>,
                                    const std::map<std::string, long>&)>;

    std::string name;
    std::vector<ArgKind> args;
    /// When set, the last argument kind may repeat; `args.size()` is then
    /// the minimum count.
    bool variadic = false;
    std::map<std::string, long> defaults;
    Eval eval;
};

[[nodiscard]] const std::vector<BuiltinSpec>& builtin_registry();
[[nodiscard]] std::optional<std::size_t> find_builtin(const std::string& name);

} // namespace emso
