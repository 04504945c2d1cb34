#include "emso/builtins.hpp"
#include "emso/logic.hpp"

namespace emso {

namespace {

class Evaluator
{
public:
    Evaluator(const Graph& g, const Formula& phi, const EvalOptions& options)
        : g_(g), options_(options), vertices_(phi.vertex_slots(), 0), sets_(phi.set_slots(), VertexSet(g.order()))
    {
        if (options.free_sets.size() != phi.free_set_count() ||
            options.free_vertices.size() != phi.free_vertex_count()) {
            throw InvalidArgument("free variable assignment does not match the formula's declarations");
        }
        for (std::size_t k = 0; k < options.free_sets.size(); ++k) {
            if (options.free_sets[k].universe() != g.order()) {
                throw InvalidArgument("free set '" + phi.set_names()[k] + "' has the wrong universe");
            }
            sets_[k] = options.free_sets[k];
        }
        for (std::size_t k = 0; k < options.free_vertices.size(); ++k) {
            if (options.free_vertices[k] >= g.order()) {
                throw InvalidArgument("free vertex '" + phi.vertex_names()[k] + "' is out of range");
            }
            vertices_[k] = options.free_vertices[k];
        }
    }

    bool eval(const Node& n)
    {
        if (++steps_ > options_.max_steps) {
            throw BudgetExceeded(steps_);
        }
        switch (n.kind) {
        case NodeKind::True: return true;
        case NodeKind::False: return false;
        case NodeKind::Exists:
        case NodeKind::Forall: {
            bool want = n.kind == NodeKind::Exists;
            for (Vertex v = 0; v < g_.order(); ++v) {
                vertices_[n.slot] = v;
                if (eval(*n.children.front()) == want) {
                    return want;
                }
            }
            return !want;
        }
        case NodeKind::ExistsSet: {
            auto order = g_.order();
            if (order > 62) {
                throw InvalidArgument("set quantification needs at most 62 vertices");
            }
            std::uint64_t total = std::uint64_t{1} << order;
            for (std::uint64_t mask = 0; mask < total; ++mask) {
                sets_[n.slot] = VertexSet::from_mask(order, mask);
                if (eval(*n.children.front())) {
                    return true;
                }
            }
            return false;
        }
        case NodeKind::Not: return !eval(*n.children.front());
        case NodeKind::And: return eval(*n.children[0]) && eval(*n.children[1]);
        case NodeKind::Or: return eval(*n.children[0]) || eval(*n.children[1]);
        case NodeKind::Implies: return !eval(*n.children[0]) || eval(*n.children[1]);
        case NodeKind::Iff: return eval(*n.children[0]) == eval(*n.children[1]);
        case NodeKind::Adjacent: return g_.adjacent(vertices_[n.slot], vertices_[n.slot2]);
        case NodeKind::Equal: return vertices_[n.slot] == vertices_[n.slot2];
        case NodeKind::Member: return sets_[n.slot2].contains(vertices_[n.slot]);
        case NodeKind::Builtin: return call(n);
        }
        return false;
    }

    [[nodiscard]] std::uint64_t steps() const noexcept { return steps_; }

private:
    bool call(const Node& n)
    {
        std::vector<VertexSet> sets;
        std::vector<Vertex> vertices;
        for (const auto& arg : n.args) {
            if (arg.is_vertex) {
                vertices.push_back(vertices_[arg.slots.front()]);
                continue;
            }
            if (arg.slots.size() == 1) {
                sets.push_back(sets_[arg.slots.front()]);
                continue;
            }
            VertexSet u(g_.order());
            for (auto slot : arg.slots) {
                for (Vertex v : sets_[slot].members()) {
                    u.insert(v);
                }
            }
            sets.push_back(std::move(u));
        }
        return builtin_registry()[n.builtin].eval(g_, sets, vertices, n.params);
    }

    const Graph& g_;
    const EvalOptions& options_;
    std::vector<Vertex> vertices_;
    std::vector<VertexSet> sets_;
    std::uint64_t steps_ = 0;
};

} // namespace

bool evaluate(const Graph& g, const Formula& phi, const EvalOptions& options, EvalStats* stats)
{
    Evaluator ev(g, phi, options);
    bool verdict = false;
    try {
        verdict = ev.eval(phi.root());
    } catch (const BudgetExceeded&) {
        if (stats != nullptr) {
            stats->steps = ev.steps();
        }
        throw;
    }
    if (stats != nullptr) {
        stats->steps = ev.steps();
    }
    return verdict;
}

} // namespace emso
