#include "emso/process.hpp"

#include <string>

namespace emso {

namespace {

std::string rule_text(ProcessRule rule)
{
    return "(" + std::to_string(static_cast<int>(rule)) + ")";
}

// r^e, or empty on overflow.
std::optional<std::uint64_t> power(std::uint64_t r, std::uint64_t e) noexcept
{
    std::uint64_t out = 1;
    for (std::uint64_t k = 0; k < e; ++k) {
        if (__builtin_mul_overflow(out, r, &out)) {
            return std::nullopt;
        }
    }
    return out;
}

} // namespace

Vertex ProcessState::add_vertex(Role role)
{
    roles_.push_back(role);
    return static_cast<Vertex>(roles_.size() - 1);
}

void ProcessState::add_connector(Vertex u, Vertex v)
{
    Vertex prev = u;
    for (std::size_t k = 0; k < gamma_; ++k) {
        auto x = add_vertex(Role::Connector);
        edges_.emplace_back(prev, x);
        prev = x;
    }
    edges_.emplace_back(prev, v);
}

ProcessRule ProcessState::next_rule() const noexcept
{
    return next_;
}

void ProcessState::advance()
{
    auto rules = matching_rules(*this);
    if (rules.size() != 1 || rules.front() != next_) {
        std::string found;
        for (auto rule : rules) {
            found += rule_text(rule);
        }
        throw InvariantViolation("process at " + std::to_string(vertex_count()) + " vertices expects rule " +
                                 rule_text(next_) + " but the vertex-count conditions match {" + found + "}");
    }
    auto a = floor_;
    switch (next_) {
    case ProcessRule::Floor: {
        auto v = add_vertex(Role::F1);
        edges_.emplace_back(f1_.back(), v);
        f1_.push_back(v);
        f2_levels_.emplace_back();
        j_ = 0;
        next_ = ProcessRule::TreeLeaf;
        break;
    }
    case ProcessRule::TreeLeaf: {
        auto parent = f2_levels_[a - 1][j_ / r_];
        auto leaf = add_vertex(Role::F2);
        edges_.emplace_back(parent, leaf);
        f2_levels_[a].push_back(leaf);
        add_connector(f1_.back(), leaf);
        last_tree_leaf_ = leaf;
        next_ = ProcessRule::PathExtend;
        break;
    }
    case ProcessRule::PathExtend: {
        auto v = add_vertex(Role::TF1);
        edges_.emplace_back(tf1_.back(), v);
        tf1_.push_back(v);
        add_connector(last_tree_leaf_, v);
        tf2_levels_.emplace_back();
        j0_ = 0;
        next_ = ProcessRule::TopLeaf;
        break;
    }
    case ProcessRule::TopLeaf: {
        auto depth = tf1_.size() - 1;
        auto parent = tf2_levels_[depth - 1][j0_ / r_];
        auto leaf = add_vertex(Role::TF2);
        edges_.emplace_back(parent, leaf);
        tf2_levels_[depth].push_back(leaf);
        add_connector(tf1_.back(), leaf);
        ++j0_;
        if (tf2_levels_[depth].size() == tf2_levels_[depth - 1].size() * r_) {
            ++j_;
            next_ = f2_levels_[a].size() == f2_levels_[a - 1].size() * r_ ? ProcessRule::Floor
                                                                            : ProcessRule::TreeLeaf;
        }
        break;
    }
    }
    ++step_;
    auto floor = floor_for_vertex_count(gamma_, r_, vertex_count());
    bool completed = next_ == ProcessRule::Floor;
    if (floor != (completed ? a + 1 : a)) {
        throw InvariantViolation("process floor " + std::to_string(floor) + " at " +
                                 std::to_string(vertex_count()) + " vertices disagrees with the structure");
    }
    floor_ = floor;
}

ProcessState process_init(std::size_t gamma, std::size_t r)
{
    WitnessParams{1, gamma, r}.validate();
    ProcessState s;
    s.gamma_ = gamma;
    s.r_ = r;
    auto r1 = s.add_vertex(Role::F1);
    auto r2 = s.add_vertex(Role::F2);
    auto tr1 = s.add_vertex(Role::TF1);
    auto tr2 = s.add_vertex(Role::TF2);
    s.add_connector(r1, r2);
    s.add_connector(r2, tr1);
    s.add_connector(tr1, tr2);
    s.f1_ = {r1};
    s.f2_levels_ = {{r2}};
    s.tf1_ = {tr1};
    s.tf2_levels_ = {{tr2}};
    s.floor_ = 1;
    s.next_ = ProcessRule::Floor;
    return s;
}

ProcessState process_step(const ProcessState& state)
{
    ProcessState next = state;
    next.advance();
    return next;
}

std::size_t floor_for_vertex_count(std::size_t gamma, std::size_t r, std::uint64_t v)
{
    auto first = w_star_vertex_count({1, gamma, r});
    if (!first || *first > v) {
        return 0;
    }
    std::size_t a = 1;
    while (true) {
        auto next = w_star_vertex_count({a + 1, gamma, r});
        if (!next || *next > v) {
            return a;
        }
        ++a;
    }
}

std::vector<ProcessRule> matching_rules(const ProcessState& state)
{
    std::vector<ProcessRule> out;
    auto g1 = static_cast<std::uint64_t>(state.gamma() + 1);
    auto r = static_cast<std::uint64_t>(state.r());
    std::uint64_t v = state.vertex_count();
    auto a = floor_for_vertex_count(state.gamma(), state.r(), v);
    if (a == 0) {
        return out;
    }
    auto base_count = *w_star_vertex_count({a, state.gamma(), state.r()});
    if (v == base_count) {
        out.push_back(ProcessRule::Floor);
    }
    if (v < base_count + 1 || (v - base_count - 1) % g1 != 0) {
        return out;
    }
    auto q = (v - base_count - 1) / g1;
    auto w_a = omega(r, a);
    auto rounds = power(r, a);
    std::uint64_t s_j = 0;
    for (std::uint64_t j = 0; !rounds || j < *rounds; ++j) {
        auto start = 2 * j + s_j;
        if (start > q) {
            break;
        }
        if (q == start) {
            out.push_back(ProcessRule::TreeLeaf);
        }
        if (q == start + 1) {
            out.push_back(ProcessRule::PathExtend);
        }
        auto level = power(r, w_a + j);
        if (q >= start + 2 && (!level || q - start - 2 < *level)) {
            out.push_back(ProcessRule::TopLeaf);
        }
        if (!level || __builtin_add_overflow(s_j, *level, &s_j)) {
            break;
        }
    }
    return out;
}

std::uint64_t bookkeeping_vertex_count(std::size_t gamma, std::size_t i, std::size_t floor)
{
    return static_cast<std::uint64_t>(gamma + 1) * (i + 2) + floor;
}

} // namespace emso
