#include "emso/detect.hpp"

#include "emso/random.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

namespace emso {

std::string_view outcome_name(Outcome o) noexcept
{
    switch (o) {
    case Outcome::Found: return "found";
    case Outcome::None: return "none";
    case Outcome::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

namespace {

constexpr Vertex kUnmapped = UINT32_MAX;

using Visitor = std::function<bool(std::span<const Vertex>)>;

class ExpansionCounter
{
public:
    ExpansionCounter(std::uint64_t& total, std::uint64_t cap) : total_(total), cap_(cap) {}

    void tick()
    {
        if (++total_ > cap_) {
            throw BudgetExceeded(total_);
        }
    }

private:
    std::uint64_t& total_;
    std::uint64_t cap_;
};

class WSearch
{
public:
    WSearch(const Graph& host, const WitnessParams& p, ExpansionCounter& counter)
        : host_(host), witness_(build_W(p)), pattern_(witness_.graph), counter_(counter)
    {
        plan();
    }

    [[nodiscard]] std::size_t pattern_order() const noexcept { return pattern_.order(); }

    /// Returns the number of embeddings visited.
    std::uint64_t run(const Visitor& visit)
    {
        if (pattern_.order() > host_.order()) {
            return 0;
        }
        image_.assign(pattern_.order(), kUnmapped);
        host_to_pattern_.assign(host_.order(), kUnmapped);
        std::uint64_t found = 0;
        extend(0, visit, found);
        return found;
    }

private:
    struct Step
    {
        Vertex vertex;
        std::optional<Vertex> anchor;
        std::size_t mapped_neighbours = 0;
    };

    void plan()
    {
        std::vector<char> placed(pattern_.order(), 0);
        auto push = [&](Vertex v, std::optional<Vertex> anchor) {
            Step s{v, anchor, 0};
            for (Vertex q : pattern_.neighbors(v)) {
                s.mapped_neighbours += placed[q] ? 1 : 0;
            }
            placed[v] = 1;
            steps_.push_back(s);
        };
        const auto& levels = witness_.f2_levels;
        auto r = levels.size() > 1 ? levels[1].size() : 1;
        push(witness_.r2, std::nullopt);
        for (std::size_t d = 1; d < levels.size(); ++d) {
            for (std::size_t t = 0; t < levels[d].size(); ++t) {
                push(levels[d][t], levels[d - 1][t / r]);
            }
        }
        for (const auto& c : witness_.connectors) {
            Vertex prev = c.to;
            for (auto it = c.inner.rbegin(); it != c.inner.rend(); ++it) {
                push(*it, prev);
                prev = *it;
            }
            if (!placed[c.from]) {
                push(c.from, prev);
            }
        }
    }

    bool compatible(const Step& s, Vertex h) const
    {
        if (host_to_pattern_[h] != kUnmapped || host_.degree(h) < pattern_.degree(s.vertex)) {
            return false;
        }
        std::size_t seen = 0;
        for (Vertex x : host_.neighbors(h)) {
            auto q = host_to_pattern_[x];
            if (q != kUnmapped) {
                if (!pattern_.adjacent(s.vertex, q)) {
                    return false;
                }
                ++seen;
            }
        }
        return seen == s.mapped_neighbours;
    }

    bool extend(std::size_t depth, const Visitor& visit, std::uint64_t& found)
    {
        if (depth == steps_.size()) {
            ++found;
            return visit(image_);
        }
        const auto& s = steps_[depth];
        auto attempt = [&](Vertex h) {
            counter_.tick();
            if (!compatible(s, h)) {
                return true;
            }
            image_[s.vertex] = h;
            host_to_pattern_[h] = s.vertex;
            bool go_on = extend(depth + 1, visit, found);
            host_to_pattern_[h] = kUnmapped;
            image_[s.vertex] = kUnmapped;
            return go_on;
        };
        if (s.anchor) {
            for (Vertex h : host_.neighbors(image_[*s.anchor])) {
                if (!attempt(h)) {
                    return false;
                }
            }
            return true;
        }
        for (Vertex h = 0; h < host_.order(); ++h) {
            if (!attempt(h)) {
                return false;
            }
        }
        return true;
    }

    const Graph& host_;
    WitnessGraph witness_;
    const Graph& pattern_;
    ExpansionCounter& counter_;
    std::vector<Step> steps_;
    std::vector<Vertex> image_;
    std::vector<Vertex> host_to_pattern_;
};

// Induced paths on gamma+2 vertices, reported in the vertex numbering of
// build_W(1, gamma, r): 0 = F1 root, 1 = F2 root, 2.. = inner vertices.
class PathSearch
{
public:
    PathSearch(const Graph& host, std::size_t gamma, ExpansionCounter& counter)
        : host_(host), length_(gamma + 2), counter_(counter)
    {
    }

    std::uint64_t run(const Visitor& visit)
    {
        if (length_ > host_.order()) {
            return 0;
        }
        path_.clear();
        on_path_.assign(host_.order(), 0);
        std::uint64_t found = 0;
        for (Vertex h = 0; h < host_.order(); ++h) {
            counter_.tick();
            push(h);
            bool go_on = extend(visit, found);
            pop();
            if (!go_on) {
                break;
            }
        }
        return found;
    }

private:
    void push(Vertex h)
    {
        path_.push_back(h);
        on_path_[h] = 1;
    }
    void pop()
    {
        on_path_[path_.back()] = 0;
        path_.pop_back();
    }

    bool extend(const Visitor& visit, std::uint64_t& found)
    {
        if (path_.size() == length_) {
            ++found;
            image_.assign(length_, 0);
            image_[0] = path_.front();
            image_[1] = path_.back();
            for (std::size_t t = 1; t + 1 < length_; ++t) {
                image_[t + 1] = path_[t];
            }
            return visit(image_);
        }
        auto tail = path_.back();
        for (Vertex x : host_.neighbors(tail)) {
            counter_.tick();
            if (on_path_[x]) {
                continue;
            }
            bool chord = false;
            for (std::size_t t = 0; t + 1 < path_.size() && !chord; ++t) {
                chord = host_.adjacent(x, path_[t]);
            }
            if (chord) {
                continue;
            }
            push(x);
            bool go_on = extend(visit, found);
            pop();
            if (!go_on) {
                return false;
            }
        }
        return true;
    }

    const Graph& host_;
    std::size_t length_;
    ExpansionCounter& counter_;
    std::vector<Vertex> path_;
    std::vector<char> on_path_;
    std::vector<Vertex> image_;
};

std::uint64_t search_W(const Graph& g, const WitnessParams& p, ExpansionCounter& counter, const Visitor& visit)
{
    if (w_vertex_count(p) > g.order()) {
        return 0;
    }
    if (p.a == 1) {
        PathSearch search(g, p.gamma, counter);
        return search.run(visit);
    }
    WSearch search(g, p, counter);
    return search.run(visit);
}

bool dominates(const Graph& g, std::span<const Vertex> image, std::vector<char>& mark)
{
    mark.assign(g.order(), 0);
    for (Vertex h : image) {
        mark[h] = 1;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (mark[v]) {
            continue;
        }
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return mark[u] != 0; })) {
            return false;
        }
    }
    return true;
}

double elapsed_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

DetectionResult find_induced_W(const Graph& g, const WitnessParams& p, SearchMode mode, SearchBudget budget)
{
    p.validate();
    auto start = std::chrono::steady_clock::now();
    DetectionResult result;
    result.a = p.a;
    ExpansionCounter counter(result.expansions, budget.max_expansions);
    try {
        result.count = search_W(g, p, counter, [&](std::span<const Vertex> image) {
            if (!result.embedding) {
                result.embedding = Embedding{{image.begin(), image.end()}};
            }
            return mode == SearchMode::CountAll;
        });
        result.outcome = result.embedding ? Outcome::Found : Outcome::None;
    } catch (const BudgetExceeded&) {
        result.outcome = Outcome::BudgetExceeded;
    }
    result.elapsed_ms = elapsed_since(start);
    return result;
}

DetectionResult find_dominating_induced_W(const Graph& g, std::size_t gamma, std::size_t r, std::size_t a_min,
                                          std::size_t a_max, SearchBudget budget)
{
    if (a_min < 1 || a_min > a_max) {
        throw InvalidArgument("a range must satisfy 1 <= a_min <= a_max");
    }
    auto start = std::chrono::steady_clock::now();
    DetectionResult result;
    ExpansionCounter counter(result.expansions, budget.max_expansions);
    std::vector<char> mark;
    try {
        for (auto a = a_max; a >= a_min; --a) {
            WitnessParams p{a, gamma, r};
            p.validate();
            auto sizes = omega_checked(r, a);
            if (!sizes || a + (gamma + 1) * *sizes > g.order()) {
                continue;
            }
            search_W(g, p, counter, [&](std::span<const Vertex> image) {
                ++result.count;
                if (dominates(g, image, mark)) {
                    result.embedding = Embedding{{image.begin(), image.end()}};
                    return false;
                }
                return true;
            });
            if (result.embedding) {
                result.a = a;
                break;
            }
        }
        result.outcome = result.embedding ? Outcome::Found : Outcome::None;
    } catch (const BudgetExceeded&) {
        result.outcome = Outcome::BudgetExceeded;
    }
    result.elapsed_ms = elapsed_since(start);
    return result;
}

bool exists_dominating_set_exact(const Graph& g, std::size_t k, SearchBudget budget)
{
    auto n = g.order();
    if (k > n) {
        throw InvalidArgument("dominating set size exceeds the vertex count");
    }
    std::vector<Vertex> pick(k);
    std::iota(pick.begin(), pick.end(), Vertex{0});
    std::uint64_t expansions = 0;
    ExpansionCounter counter(expansions, budget.max_expansions);
    std::vector<char> mark;
    while (true) {
        counter.tick();
        if (dominates(g, pick, mark)) {
            return true;
        }
        // Next k-combination in lexicographic order.
        std::size_t t = k;
        while (t > 0 && pick[t - 1] == n - k + t - 1) {
            --t;
        }
        if (t == 0) {
            return false;
        }
        ++pick[t - 1];
        for (auto u = t; u < k; ++u) {
            pick[u] = pick[u - 1] + 1;
        }
    }
}

ProportionEstimate dominating_set_fraction(const Graph& g, std::size_t k, std::uint64_t samples, std::uint64_t seed)
{
    auto n = g.order();
    if (k > n) {
        throw InvalidArgument("dominating set size exceeds the vertex count");
    }
    CounterRng rng(mix64(seed));
    std::vector<Vertex> pool(n);
    std::vector<char> mark;
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::iota(pool.begin(), pool.end(), Vertex{0});
        for (std::size_t t = 0; t < k; ++t) {
            auto pick = t + rng.below(n - t);
            std::swap(pool[t], pool[pick]);
        }
        hits += dominates(g, std::span<const Vertex>(pool.data(), k), mark) ? 1 : 0;
    }
    return wilson_estimate(hits, samples);
}

bool check_connector_property(const Graph& g, const VertexSet& V, std::size_t gamma, SearchBudget budget)
{
    if (V.universe() != g.order()) {
        throw InvalidArgument("vertex set universe does not match the graph");
    }
    auto members = V.members();
    std::vector<std::size_t> v_degree(g.order(), 0);
    for (Vertex x = 0; x < g.order(); ++x) {
        if (V.contains(x)) {
            continue;
        }
        for (Vertex y : g.neighbors(x)) {
            v_degree[x] += V.contains(y) ? 1 : 0;
        }
    }
    std::uint64_t expansions = 0;
    ExpansionCounter counter(expansions, budget.max_expansions);
    auto length = gamma + 1;
    std::vector<Vertex> path;
    std::vector<char> on_path(g.order(), 0);

    std::function<bool(Vertex)> grow = [&](Vertex v) {
        if (path.size() == length) {
            return true;
        }
        auto last_slot = path.size() + 1 == length;
        for (Vertex x : g.neighbors(path.back())) {
            counter.tick();
            if (V.contains(x) || on_path[x]) {
                continue;
            }
            if (last_slot ? !(v_degree[x] == 1 && g.adjacent(x, v)) : v_degree[x] != 0) {
                continue;
            }
            bool chord = false;
            for (std::size_t t = 0; t + 1 < path.size() && !chord; ++t) {
                chord = g.adjacent(x, path[t]);
            }
            if (chord) {
                continue;
            }
            path.push_back(x);
            on_path[x] = 1;
            bool ok = grow(v);
            on_path[x] = 0;
            path.pop_back();
            if (ok) {
                return true;
            }
        }
        return false;
    };

    // Reversing a path for (u, v) serves (v, u), so unordered pairs suffice.
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            auto u = members[i];
            auto v = members[j];
            bool ok = false;
            for (Vertex w : g.neighbors(u)) {
                counter.tick();
                if (V.contains(w)) {
                    continue;
                }
                if (length == 1) {
                    ok = v_degree[w] == 2 && g.adjacent(w, v);
                } else if (v_degree[w] == 1) {
                    path.assign(1, w);
                    on_path[w] = 1;
                    ok = grow(v);
                    on_path[w] = 0;
                }
                if (ok) {
                    break;
                }
            }
            if (!ok) {
                return false;
            }
        }
    }
    return true;
}

} // namespace emso
