#include "emso/process.hpp"

#include <numeric>

namespace emso {

namespace {

class ChainSearch
{
public:
    ChainSearch(const Graph& g, std::size_t gamma, std::size_t r, SearchBudget budget)
        : g_(g), budget_(budget)
    {
        // Canonical process run until one step past the host order; every
        // snapshot is an induced prefix of the final graph.
        auto state = process_init(gamma, r);
        sizes_.push_back(state.vertex_count());
        floors_.push_back(state.floor());
        while (state.vertex_count() <= g.order()) {
            state.advance();
            sizes_.push_back(state.vertex_count());
            floors_.push_back(state.floor());
        }
        full_ = state.graph();
        patterns_.resize(sizes_.size());
    }

    GammaRTrace run()
    {
        GammaRTrace trace;
        if (sizes_.front() <= g_.order()) {
            InducedMatcher matcher(pattern(0), g_, budget_);
            matcher.share_counter(&expansions_);
            matcher.run([&](std::span<const Vertex> image) {
                return !descend(0, image, trace);
            });
        }
        trace.expansions = expansions_;
        return trace;
    }

private:
    const Graph& pattern(std::size_t k)
    {
        if (patterns_[k].order() == 0) {
            std::vector<Vertex> prefix(sizes_[k]);
            std::iota(prefix.begin(), prefix.end(), Vertex{0});
            patterns_[k] = full_.induced(prefix);
        }
        return patterns_[k];
    }

    bool accept(std::size_t k, std::span<const Vertex> image, GammaRTrace& trace)
    {
        if (floors_[k] % 2 != 0) {
            return false;
        }
        trace.holds = true;
        trace.embedding.image.assign(image.begin(), image.end());
        trace.steps = k;
        trace.floor = floors_[k];
        return true;
    }

    // True once an accepting maximal chain through `image` is found.
    bool descend(std::size_t k, std::span<const Vertex> image, GammaRTrace& trace)
    {
        if (sizes_[k + 1] > g_.order()) {
            return accept(k, image, trace);
        }
        InducedMatcher matcher(pattern(k + 1), g_, budget_);
        matcher.share_counter(&expansions_);
        for (Vertex p = 0; p < sizes_[k]; ++p) {
            matcher.fix(p, image[p]);
        }
        std::vector<Vertex> own(image.begin(), image.end());
        bool found = false;
        auto extensions = matcher.run([&](std::span<const Vertex> next) {
            found = descend(k + 1, next, trace);
            return !found;
        });
        if (found) {
            return true;
        }
        return extensions == 0 && accept(k, own, trace);
    }

    const Graph& g_;
    SearchBudget budget_;
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> floors_;
    Graph full_;
    std::vector<Graph> patterns_;
    std::uint64_t expansions_ = 0;
};

} // namespace

GammaRTrace has_gamma_r_property(const Graph& g, std::size_t gamma, std::size_t r, SearchBudget budget)
{
    ChainSearch search(g, gamma, r, budget);
    return search.run();
}

} // namespace emso
