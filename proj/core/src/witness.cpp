#include "emso/witness.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

namespace emso {

std::string_view role_name(Role role) noexcept
{
    switch (role) {
    case Role::F1: return "F1";
    case Role::F2: return "F2";
    case Role::TF1: return "TF1";
    case Role::TF2: return "TF2";
    case Role::Connector: return "CONNECTOR";
    }
    return "?";
}

Role parse_role(std::string_view name)
{
    for (Role r : {Role::F1, Role::F2, Role::TF1, Role::TF2, Role::Connector}) {
        if (role_name(r) == name) {
            return r;
        }
    }
    throw InvalidArgument("unknown role '" + std::string(name) + "'");
}

std::string write_roles(const std::vector<Role>& roles)
{
    std::string out;
    for (std::size_t v = 0; v < roles.size(); ++v) {
        out += std::to_string(v);
        out += ' ';
        out += role_name(roles[v]);
        out += '\n';
    }
    return out;
}

std::vector<Role> read_roles(std::string_view text, std::size_t n)
{
    std::vector<std::optional<Role>> seen(n);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
            continue;
        }
        auto space = line.find(' ');
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + std::min(space, line.size()), v);
        if (space == std::string_view::npos || ec != std::errc{} || ptr != line.data() + space || v >= n) {
            throw InvalidArgument("role sidecar line " + std::to_string(line_no) + ": expected 'vertex role'");
        }
        auto name = line.substr(space + 1);
        while (!name.empty() && (name.back() == '\r' || name.back() == ' ')) {
            name.remove_suffix(1);
        }
        seen[v] = parse_role(name);
    }
    std::vector<Role> roles(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (!seen[v]) {
            throw InvalidArgument("role sidecar has no entry for vertex " + std::to_string(v));
        }
        roles[v] = *seen[v];
    }
    return roles;
}

namespace {

std::vector<std::size_t> tree_depths(const RootedTree& t)
{
    const auto& g = t.graph;
    if (t.root >= g.order() || g.edge_count() + 1 != g.order()) {
        throw InvalidArgument("gamma-product factor is not a rooted tree");
    }
    std::vector<std::size_t> depth(g.order(), SIZE_MAX);
    std::queue<Vertex> queue;
    depth[t.root] = 0;
    queue.push(t.root);
    std::size_t reached = 1;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop();
        for (Vertex u : g.neighbors(v)) {
            if (depth[u] == SIZE_MAX) {
                depth[u] = depth[v] + 1;
                ++reached;
                queue.push(u);
            }
        }
    }
    if (reached != g.order()) {
        throw InvalidArgument("gamma-product factor is not connected");
    }
    return depth;
}

std::vector<std::size_t> order_ranks(const OrderedGraph& f)
{
    auto n = f.graph.order();
    if (f.order.size() != n || n == 0) {
        throw InvalidArgument("linear order must list every vertex and have a unique minimum");
    }
    std::vector<std::size_t> rank(n, SIZE_MAX);
    for (std::size_t k = 0; k < n; ++k) {
        if (f.order[k] >= n || rank[f.order[k]] != SIZE_MAX) {
            throw InvalidArgument("linear order must list every vertex exactly once");
        }
        rank[f.order[k]] = k;
    }
    return rank;
}

Product join_by_distance(const Graph& g1, const std::vector<std::size_t>& d1, const Graph& g2,
                         const std::vector<std::size_t>& d2, std::size_t gamma)
{
    auto shift = static_cast<Vertex>(g1.order());
    GraphBuilder b(g1.order() + g2.order());
    for (auto [u, v] : g1.edges()) {
        b.add_edge(u, v);
    }
    for (auto [u, v] : g2.edges()) {
        b.add_edge(u + shift, v + shift);
    }
    Product out;
    for (Vertex u = 0; u < g1.order(); ++u) {
        for (Vertex v = 0; v < g2.order(); ++v) {
            if (d1[u] == d2[v]) {
                auto inner = b.add_path(u, v + shift, gamma);
                out.connectors.push_back(ConnectorPath{u, v + shift, std::move(inner), ConnectorKind::Generic});
            }
        }
    }
    out.graph = b.build();
    return out;
}

std::optional<std::uint64_t> mul(std::uint64_t x, std::uint64_t y) noexcept
{
    std::uint64_t z = 0;
    if (__builtin_mul_overflow(x, y, &z)) {
        return std::nullopt;
    }
    return z;
}

std::optional<std::uint64_t> add(std::uint64_t x, std::uint64_t y) noexcept
{
    std::uint64_t z = 0;
    if (__builtin_add_overflow(x, y, &z)) {
        return std::nullopt;
    }
    return z;
}

// Appends a perfect r-ary tree of the given depth count in BFS order.
std::vector<std::vector<Vertex>> add_perfect_tree(GraphBuilder& b, std::vector<Role>& roles, Role role,
                                                  std::size_t r, std::size_t levels)
{
    std::vector<std::vector<Vertex>> out;
    out.push_back({b.add_vertex()});
    roles.push_back(role);
    for (std::size_t d = 1; d < levels; ++d) {
        std::vector<Vertex> level;
        for (Vertex parent : out.back()) {
            for (std::size_t c = 0; c < r; ++c) {
                auto v = b.add_vertex();
                roles.push_back(role);
                b.add_edge(parent, v);
                level.push_back(v);
            }
        }
        out.push_back(std::move(level));
    }
    return out;
}

std::vector<Vertex> add_path_part(GraphBuilder& b, std::vector<Role>& roles, Role role, std::size_t length)
{
    std::vector<Vertex> out;
    for (std::size_t k = 0; k < length; ++k) {
        auto v = b.add_vertex();
        roles.push_back(role);
        if (k > 0) {
            b.add_edge(out.back(), v);
        }
        out.push_back(v);
    }
    return out;
}

void connect(GraphBuilder& b, WitnessGraph& w, Vertex from, Vertex to, std::size_t gamma, ConnectorKind kind)
{
    auto inner = b.add_path(from, to, gamma);
    w.roles.insert(w.roles.end(), inner.size(), Role::Connector);
    w.connectors.push_back(ConnectorPath{from, to, std::move(inner), kind});
}

// gamma-product of a rooted path (root first) with a levelled tree.
void connect_by_depth(GraphBuilder& b, WitnessGraph& w, const std::vector<Vertex>& path,
                      const std::vector<std::vector<Vertex>>& levels, std::size_t gamma, ConnectorKind kind)
{
    for (std::size_t d = 0; d < levels.size() && d < path.size(); ++d) {
        for (Vertex v : levels[d]) {
            connect(b, w, path[d], v, gamma, kind);
        }
    }
}

} // namespace

Product gamma_product(const RootedTree& f1, const RootedTree& f2, std::size_t gamma)
{
    return join_by_distance(f1.graph, tree_depths(f1), f2.graph, tree_depths(f2), gamma);
}

Product ordered_gamma_product(const OrderedGraph& f1, const OrderedGraph& f2, std::size_t gamma)
{
    return join_by_distance(f1.graph, order_ranks(f1), f2.graph, order_ranks(f2), gamma);
}

void WitnessParams::validate() const
{
    if (a < 1) {
        throw InvalidArgument("witness parameter a must be >= 1");
    }
    if (r < 2) {
        throw InvalidArgument("witness parameter r must be >= 2");
    }
}

std::vector<Vertex> WitnessGraph::vertices_with(Role role) const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < roles.size(); ++v) {
        if (roles[v] == role) {
            out.push_back(v);
        }
    }
    return out;
}

std::optional<std::uint64_t> omega_checked(std::uint64_t r, std::uint64_t a) noexcept
{
    if (r < 2) {
        return std::nullopt;
    }
    // 1 + r + ... + r^{a-1}
    std::uint64_t sum = 0;
    std::uint64_t term = 1;
    for (std::uint64_t k = 0; k < a; ++k) {
        auto s = add(sum, term);
        if (!s) {
            return std::nullopt;
        }
        sum = *s;
        if (k + 1 < a) {
            auto t = mul(term, r);
            if (!t) {
                return std::nullopt;
            }
            term = *t;
        }
    }
    return sum;
}

std::uint64_t omega(std::uint64_t r, std::uint64_t a)
{
    if (r < 2) {
        throw InvalidArgument("omega requires r >= 2");
    }
    auto w = omega_checked(r, a);
    if (!w) {
        throw InvalidArgument("omega(" + std::to_string(r) + ", " + std::to_string(a) + ") overflows 64 bits");
    }
    return *w;
}

std::uint64_t w_vertex_count(const WitnessParams& p)
{
    p.validate();
    return p.a + (p.gamma + 1) * omega(p.r, p.a);
}

std::uint64_t w_edge_count(const WitnessParams& p)
{
    p.validate();
    auto w = omega(p.r, p.a);
    return (p.a - 1) + (w - 1) + (p.gamma + 1) * w;
}

std::optional<std::uint64_t> w_star_vertex_count(const WitnessParams& p) noexcept
{
    auto w = omega_checked(p.r, p.a);
    if (!w) {
        return std::nullopt;
    }
    auto ww = omega_checked(p.r, *w);
    if (!ww) {
        return std::nullopt;
    }
    auto g1 = p.gamma + 1;
    auto t1 = mul(2 * g1, *w);
    auto t2 = mul(g1, *ww);
    if (!t1 || !t2) {
        return std::nullopt;
    }
    auto s = add(*t1, *t2);
    return s ? add(*s, p.a) : std::nullopt;
}

std::optional<std::uint64_t> w_star_edge_count(const WitnessParams& p) noexcept
{
    auto w = omega_checked(p.r, p.a);
    if (!w) {
        return std::nullopt;
    }
    auto ww = omega_checked(p.r, *w);
    if (!ww) {
        return std::nullopt;
    }
    auto g2 = p.gamma + 2;
    auto t1 = mul(2 * g2, *w);
    auto t2 = mul(g2, *ww);
    if (!t1 || !t2) {
        return std::nullopt;
    }
    auto s = add(*t1, *t2);
    if (!s) {
        return std::nullopt;
    }
    s = add(*s, p.a);
    return s ? std::optional<std::uint64_t>(*s - 4) : std::nullopt;
}

WitnessGraph build_W(const WitnessParams& p)
{
    if (w_vertex_count(p) > kDefaultWitnessVertexBudget) {
        throw InvalidArgument("W for a=" + std::to_string(p.a) + " exceeds the vertex budget of " +
                              std::to_string(kDefaultWitnessVertexBudget));
    }
    WitnessGraph w;
    GraphBuilder b;
    w.f1_order = add_path_part(b, w.roles, Role::F1, p.a);
    w.f2_levels = add_perfect_tree(b, w.roles, Role::F2, p.r, p.a);
    connect_by_depth(b, w, w.f1_order, w.f2_levels, p.gamma, ConnectorKind::F1F2);
    w.r1 = w.f1_order.front();
    w.r2 = w.f2_levels.front().front();
    w.graph = b.build();
    return w;
}

WitnessGraph build_W_star(const WitnessParams& p, std::uint64_t max_vertices)
{
    p.validate();
    auto total = w_star_vertex_count(p);
    if (!total || *total > max_vertices) {
        throw InvalidArgument("W* for a=" + std::to_string(p.a) + ", gamma=" + std::to_string(p.gamma) +
                              ", r=" + std::to_string(p.r) + " exceeds the vertex budget of " +
                              std::to_string(max_vertices));
    }
    auto w_a = omega(p.r, p.a);

    WitnessGraph w;
    GraphBuilder b;
    w.f1_order = add_path_part(b, w.roles, Role::F1, p.a);
    w.f2_levels = add_perfect_tree(b, w.roles, Role::F2, p.r, p.a);
    w.tf1_order = add_path_part(b, w.roles, Role::TF1, w_a);
    w.tf2_levels = add_perfect_tree(b, w.roles, Role::TF2, p.r, w_a);

    connect_by_depth(b, w, w.f1_order, w.f2_levels, p.gamma, ConnectorKind::F1F2);
    // Ordered product: F2 in breadth-first order against the path TF1.
    std::size_t rank = 0;
    for (const auto& level : w.f2_levels) {
        for (Vertex v : level) {
            connect(b, w, v, w.tf1_order[rank++], p.gamma, ConnectorKind::F2TF1);
        }
    }
    connect_by_depth(b, w, w.tf1_order, w.tf2_levels, p.gamma, ConnectorKind::TF1TF2);

    w.r1 = w.f1_order.front();
    w.r2 = w.f2_levels.front().front();
    w.tr1 = w.tf1_order.front();
    w.tr2 = w.tf2_levels.front().front();
    w.graph = b.build();
    return w;
}

} // namespace emso
