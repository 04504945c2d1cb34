#include "emso/search.hpp"

#include <algorithm>
#include <map>

namespace emso {

bool is_induced_embedding(const Graph& pattern, const Graph& host, std::span<const Vertex> image)
{
    if (image.size() != pattern.order()) {
        return false;
    }
    std::vector<char> seen(host.order(), 0);
    for (Vertex h : image) {
        if (h >= host.order() || seen[h]) {
            return false;
        }
        seen[h] = 1;
    }
    for (Vertex u = 0; u < pattern.order(); ++u) {
        for (Vertex v = u + 1; v < pattern.order(); ++v) {
            if (pattern.adjacent(u, v) != host.adjacent(image[u], image[v])) {
                return false;
            }
        }
    }
    return true;
}

InducedMatcher::InducedMatcher(const Graph& pattern, const Graph& host, SearchBudget budget)
    : pattern_(pattern), host_(host), budget_(budget)
{
}

void InducedMatcher::set_colors(std::vector<std::uint32_t> pattern_colors, std::vector<std::uint32_t> host_colors)
{
    if (pattern_colors.size() != pattern_.order() || host_colors.size() != host_.order()) {
        throw InvalidArgument("colour vectors must cover every vertex");
    }
    pattern_colors_ = std::move(pattern_colors);
    host_colors_ = std::move(host_colors);
}

void InducedMatcher::fix(Vertex p, Vertex h)
{
    if (p >= pattern_.order() || h >= host_.order()) {
        throw InvalidArgument("fixed pair outside pattern or host");
    }
    fixed_.emplace_back(p, h);
}

void InducedMatcher::plan()
{
    auto k = pattern_.order();
    steps_.clear();
    std::vector<long> position(k, -1);
    std::vector<std::size_t> placed_neighbours(k, 0);

    auto place = [&](Vertex p, std::optional<std::size_t> parent) {
        Step step{p, parent, {}};
        for (Vertex q : pattern_.neighbors(p)) {
            if (position[q] >= 0) {
                step.adjacent_earlier.push_back(static_cast<std::size_t>(position[q]));
            }
        }
        position[p] = static_cast<long>(steps_.size());
        steps_.push_back(std::move(step));
        for (Vertex q : pattern_.neighbors(p)) {
            ++placed_neighbours[q];
        }
    };

    for (auto [p, h] : fixed_) {
        if (position[p] >= 0) {
            throw InvalidArgument("pattern vertex fixed twice");
        }
        place(p, std::nullopt);
    }
    while (steps_.size() < k) {
        Vertex best = 0;
        bool have = false;
        for (Vertex p = 0; p < k; ++p) {
            if (position[p] >= 0) {
                continue;
            }
            if (!have || placed_neighbours[p] > placed_neighbours[best] ||
                (placed_neighbours[p] == placed_neighbours[best] && pattern_.degree(p) > pattern_.degree(best))) {
                best = p;
                have = true;
            }
        }
        std::optional<std::size_t> parent;
        for (Vertex q : pattern_.neighbors(best)) {
            if (position[q] >= 0 && (!parent || pattern_.degree(q) < pattern_.degree(steps_[*parent].pattern_vertex))) {
                parent = static_cast<std::size_t>(position[q]);
            }
        }
        place(best, parent);
    }
}

bool InducedMatcher::compatible(std::size_t depth, Vertex h) const
{
    const auto& step = steps_[depth];
    Vertex p = step.pattern_vertex;
    if (used_[h] || host_.degree(h) < pattern_.degree(p)) {
        return false;
    }
    if (!pattern_colors_.empty() && pattern_colors_[p] != host_colors_[h]) {
        return false;
    }
    for (auto pos : step.adjacent_earlier) {
        if (!host_.adjacent(h, image_[steps_[pos].pattern_vertex])) {
            return false;
        }
    }
    // Non-adjacency: h may touch no other mapped vertex.
    std::size_t touching = 0;
    for (Vertex x : host_.neighbors(h)) {
        touching += used_[x] ? 1 : 0;
    }
    return touching == step.adjacent_earlier.size();
}

bool InducedMatcher::extend(std::size_t depth, const Visitor& visit, std::uint64_t& found)
{
    if (depth == steps_.size()) {
        ++found;
        return visit(image_);
    }
    const auto& step = steps_[depth];
    Vertex p = step.pattern_vertex;

    auto try_candidate = [&](Vertex h) {
        ++expansions_;
        auto total = shared_ != nullptr ? ++*shared_ : expansions_;
        if (total > budget_.max_expansions) {
            throw BudgetExceeded(total);
        }
        if (!compatible(depth, h)) {
            return true;
        }
        image_[p] = h;
        used_[h] = 1;
        bool go_on = extend(depth + 1, visit, found);
        used_[h] = 0;
        return go_on;
    };

    if (depth < fixed_.size()) {
        return try_candidate(fixed_[depth].second);
    }
    if (step.parent) {
        Vertex anchor = image_[steps_[*step.parent].pattern_vertex];
        for (Vertex h : host_.neighbors(anchor)) {
            if (!try_candidate(h)) {
                return false;
            }
        }
        return true;
    }
    for (Vertex h = 0; h < host_.order(); ++h) {
        if (!try_candidate(h)) {
            return false;
        }
    }
    return true;
}

std::uint64_t InducedMatcher::run(const Visitor& visit)
{
    expansions_ = 0;
    if (pattern_.order() > host_.order()) {
        return 0;
    }
    plan();
    image_.assign(pattern_.order(), 0);
    used_.assign(host_.order(), 0);
    std::uint64_t found = 0;
    extend(0, visit, found);
    return found;
}

std::vector<Embedding> induced_embeddings(const Graph& pattern, const Graph& host, std::size_t limit,
                                          SearchBudget budget)
{
    std::vector<Embedding> out;
    InducedMatcher matcher(pattern, host, budget);
    matcher.run([&](std::span<const Vertex> image) {
        out.push_back(Embedding{{image.begin(), image.end()}});
        return limit == 0 || out.size() < limit;
    });
    return out;
}

std::uint64_t count_induced_embeddings(const Graph& pattern, const Graph& host, SearchBudget budget)
{
    InducedMatcher matcher(pattern, host, budget);
    return matcher.run([](std::span<const Vertex>) { return true; });
}

namespace {

std::vector<std::uint32_t> refine(const Graph& g)
{
    auto n = g.order();
    std::vector<std::uint32_t> color(n);
    for (Vertex v = 0; v < n; ++v) {
        color[v] = static_cast<std::uint32_t>(g.degree(v));
    }
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::vector<std::vector<std::uint32_t>> signature(n);
        for (Vertex v = 0; v < n; ++v) {
            auto& sig = signature[v];
            sig.push_back(color[v]);
            for (Vertex u : g.neighbors(v)) {
                sig.push_back(color[u]);
            }
            std::sort(sig.begin() + 1, sig.end());
            ids.emplace(sig, 0);
        }
        std::uint32_t next = 0;
        for (auto& [sig, id] : ids) {
            id = next++;
        }
        for (Vertex v = 0; v < n; ++v) {
            color[v] = ids[signature[v]];
        }
        if (ids.size() == classes) {
            return color;
        }
        classes = ids.size();
    }
}

} // namespace

std::vector<std::uint32_t> color_refinement(const Graph& g)
{
    return refine(g);
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> joint_color_refinement(const Graph& a,
                                                                                         const Graph& b)
{
    auto edges = a.edges();
    auto offset = static_cast<Vertex>(a.order());
    for (auto [u, v] : b.edges()) {
        edges.emplace_back(u + offset, v + offset);
    }
    auto colors = refine(Graph(a.order() + b.order(), edges));
    return {std::vector<std::uint32_t>(colors.begin(), colors.begin() + offset),
            std::vector<std::uint32_t>(colors.begin() + offset, colors.end())};
}

std::uint64_t automorphism_count(const Graph& g, SearchBudget budget)
{
    auto colors = refine(g);
    InducedMatcher matcher(g, g, budget);
    matcher.set_colors(colors, colors);
    return matcher.run([](std::span<const Vertex>) { return true; });
}

std::optional<Embedding> find_isomorphism(const Graph& a, const Graph& b, SearchBudget budget)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
        return std::nullopt;
    }
    auto [ca, cb] = joint_color_refinement(a, b);
    auto sa = ca;
    auto sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
        return std::nullopt;
    }
    InducedMatcher matcher(a, b, budget);
    matcher.set_colors(std::move(ca), std::move(cb));
    std::optional<Embedding> out;
    matcher.run([&](std::span<const Vertex> image) {
        out = Embedding{{image.begin(), image.end()}};
        return false;
    });
    return out;
}

} // namespace emso
