#include "emso/random.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace emso {

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept
{
    // Rejection sampling on the largest multiple of bound.
    auto limit = UINT64_MAX - UINT64_MAX % bound;
    while (true) {
        auto x = next();
        if (x < limit) {
            return x % bound;
        }
    }
}

void SamplerConfig::validate() const
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument("edge probability must lie in [0, 1], got " + std::to_string(p));
    }
    if (n > UINT32_MAX) {
        throw InvalidArgument("vertex count exceeds 32-bit vertex ids");
    }
}

namespace {

// Domain separation between the two samplers and from derive_stream.
std::uint64_t pair_key(const SamplerConfig& cfg, std::uint64_t salt) noexcept
{
    return mix64(mix64(cfg.seed ^ salt) + cfg.stream * kGolden);
}

Graph trivial(const SamplerConfig& cfg)
{
    return cfg.p == 0.0 ? Graph(cfg.n, std::span<const Edge>{}) : Graph::complete(cfg.n);
}

} // namespace

Graph sample_gnp_dense(const SamplerConfig& cfg)
{
    cfg.validate();
    if (cfg.p == 0.0 || cfg.p == 1.0) {
        return trivial(cfg);
    }
    CounterRng rng(pair_key(cfg, 0x64656E7365ULL));
    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex u = 0; u < cfg.n; ++u) {
        for (Vertex v = u + 1; v < cfg.n; ++v, ++k) {
            if (CounterRng::to_unit(rng.at(k)) < cfg.p) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(cfg.n, edges);
}

Graph sample_gnp_skip(const SamplerConfig& cfg)
{
    cfg.validate();
    if (cfg.p == 0.0 || cfg.p == 1.0) {
        return trivial(cfg);
    }
    CounterRng rng(pair_key(cfg, 0x736B6970ULL));
    auto log_q = std::log1p(-cfg.p);
    std::vector<Edge> edges;
    // Pairs (w, v) with w < v enumerated row by row over v.
    std::uint64_t n = cfg.n;
    std::uint64_t v = 1;
    std::int64_t w = -1;
    while (v < n) {
        auto r = rng.uniform();
        auto gap = std::floor(std::log1p(-r) / log_q);
        if (gap > static_cast<double>(n) * static_cast<double>(n)) {
            break;
        }
        w += 1 + static_cast<std::int64_t>(gap);
        while (v < n && w >= static_cast<std::int64_t>(v)) {
            w -= static_cast<std::int64_t>(v);
            ++v;
        }
        if (v < n) {
            edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
        }
    }
    return Graph(cfg.n, edges);
}

Graph sample_gnp(const SamplerConfig& cfg)
{
    cfg.validate();
    if (cfg.n > 0 && cfg.p < 10.0 / static_cast<double>(cfg.n)) {
        return sample_gnp_skip(cfg);
    }
    return sample_gnp_dense(cfg);
}

} // namespace emso
