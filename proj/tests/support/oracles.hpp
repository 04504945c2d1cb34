#pragma once

// Brute-force reference implementations. They use nothing from the library
// beyond Graph adjacency queries, so agreement with the optimised code is
// meaningful.

#include "emso/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using emso::Graph;
using emso::Vertex;

inline bool preserves(const Graph& pattern, const Graph& host, const std::vector<Vertex>& image)
{
    for (Vertex u = 0; u < pattern.order(); ++u) {
        for (Vertex v = u + 1; v < pattern.order(); ++v) {
            if (pattern.adjacent(u, v) != host.adjacent(image[u], image[v])) {
                return false;
            }
        }
    }
    return true;
}

/// Every injective map pattern -> host, checked only once complete.
inline std::vector<std::vector<Vertex>> induced_embeddings(const Graph& pattern, const Graph& host)
{
    std::vector<std::vector<Vertex>> out;
    const std::size_t k = pattern.order();
    std::vector<Vertex> image(k);
    std::vector<char> used(host.order(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
        if (depth == k) {
            if (preserves(pattern, host, image)) {
                out.push_back(image);
            }
            return;
        }
        for (Vertex h = 0; h < host.order(); ++h) {
            if (!used[h]) {
                used[h] = 1;
                image[depth] = h;
                rec(depth + 1);
                used[h] = 0;
            }
        }
    };
    if (k <= host.order()) {
        rec(0);
    }
    return out;
}

/// |Aut(g)| over all n! permutations.
inline std::uint64_t automorphisms(const Graph& g)
{
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::uint64_t count = 0;
    do {
        count += preserves(g, g, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
        return false;
    }
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
        if (preserves(a, b, perm)) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Subset of vertices given as a bit mask.
inline bool dominates(const Graph& g, std::uint64_t mask)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        if (mask >> v & 1) {
            continue;
        }
        bool hit = false;
        for (Vertex u = 0; u < g.order() && !hit; ++u) {
            hit = (mask >> u & 1) && g.adjacent(u, v);
        }
        if (!hit) {
            return false;
        }
    }
    return true;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Graph with edges listed as pairs; convenience for hand-written cases.
inline Graph make(std::size_t n, std::initializer_list<std::pair<int, int>> edges)
{
    std::vector<emso::Edge> e;
    for (auto [u, v] : edges) {
        e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(n, e);
}

/// Uniform random graph from a local LCG, independent of the library
/// sampler.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    std::uint64_t s = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    std::vector<emso::Edge> e;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            if (static_cast<double>(s >> 11) * 0x1.0p-53 < p) {
                e.emplace_back(u, v);
            }
        }
    }
    return Graph(n, e);
}

} // namespace oracle
