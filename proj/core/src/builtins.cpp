#include "emso/builtins.hpp"

#include "emso/detect.hpp"
#include "emso/search.hpp"
#include "emso/witness.hpp"

#include <algorithm>
#include <set>

namespace emso {

namespace {

std::size_t neighbours_in(const Graph& g, Vertex v, const VertexSet& s)
{
    std::size_t k = 0;
    for (Vertex u : g.neighbors(v)) {
        k += s.contains(u) ? 1 : 0;
    }
    return k;
}

std::vector<Vertex> neighbour_list_in(const Graph& g, Vertex v, const VertexSet& s)
{
    std::vector<Vertex> out;
    for (Vertex u : g.neighbors(v)) {
        if (s.contains(u)) {
            out.push_back(u);
        }
    }
    return out;
}

VertexSet unite(std::initializer_list<const VertexSet*> sets, std::size_t n)
{
    VertexSet out(n);
    for (const auto* s : sets) {
        for (Vertex v : s->members()) {
            out.insert(v);
        }
    }
    return out;
}

bool pairwise_disjoint(std::initializer_list<const VertexSet*> sets)
{
    std::vector<const VertexSet*> list(sets);
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
            if (list[i]->intersects(*list[j])) {
                return false;
            }
        }
    }
    return true;
}

// Nonempty, connected, |E| = |S| - 1 and maximum degree <= 2.
bool induces_path(const Graph& g, const std::vector<Vertex>& members, const VertexSet& s)
{
    if (members.empty()) {
        return false;
    }
    std::size_t degree_sum = 0;
    for (Vertex v : members) {
        auto d = neighbours_in(g, v, s);
        if (d > 2) {
            return false;
        }
        degree_sum += d;
    }
    if (degree_sum != 2 * (members.size() - 1)) {
        return false;
    }
    // A forest with |S|-1 edges is connected; rule out a cycle plus isolated
    // vertices by walking from an end.
    std::vector<Vertex> stack{members.front()};
    VertexSet seen(g.order(), {members.front()});
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v)) {
            if (s.contains(u) && !seen.contains(u)) {
                seen.insert(u);
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == members.size();
}

// Connected components of G[S].
std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet& s)
{
    std::vector<std::vector<Vertex>> out;
    VertexSet seen(g.order());
    for (Vertex start : s.members()) {
        if (seen.contains(start)) {
            continue;
        }
        std::vector<Vertex> comp{start};
        seen.insert(start);
        for (std::size_t k = 0; k < comp.size(); ++k) {
            for (Vertex u : g.neighbors(comp[k])) {
                if (s.contains(u) && !seen.contains(u)) {
                    seen.insert(u);
                    comp.push_back(u);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

// Ends of a component inducing a path (a single vertex is its own end).
std::vector<Vertex> path_ends(const Graph& g, const std::vector<Vertex>& comp, const VertexSet& s)
{
    if (comp.size() == 1) {
        return {comp.front(), comp.front()};
    }
    std::vector<Vertex> ends;
    for (Vertex v : comp) {
        if (neighbours_in(g, v, s) == 1) {
            ends.push_back(v);
        }
    }
    return ends;
}

// Pairs (a, b) joined by a path a - c_1 - ... - c_gamma - b through
// distinct vertices of C.
std::set<std::pair<Vertex, Vertex>> links(const Graph& g, const VertexSet& a_side, const VertexSet& b_side,
                                          const VertexSet& c, std::size_t gamma)
{
    std::set<std::pair<Vertex, Vertex>> out;
    std::vector<Vertex> trail;
    VertexSet on_trail(g.order());
    auto walk = [&](auto&& self, Vertex origin) -> void {
        auto last = trail.empty() ? origin : trail.back();
        if (trail.size() == gamma) {
            for (Vertex b : g.neighbors(last)) {
                if (b_side.contains(b) && b != origin) {
                    out.emplace(origin, b);
                }
            }
            return;
        }
        for (Vertex x : g.neighbors(last)) {
            if (c.contains(x) && !on_trail.contains(x)) {
                trail.push_back(x);
                on_trail.insert(x);
                self(self, origin);
                on_trail.erase(x);
                trail.pop_back();
            }
        }
    };
    for (Vertex a : a_side.members()) {
        walk(walk, a);
    }
    return out;
}

// A path anchor - i_1 - ... - i_gamma - w outside U where i_1 touches only
// the anchor in U and i_2..i_gamma touch nothing in U.
bool hanging_path(const Graph& g, const VertexSet& u_set, Vertex anchor, Vertex w, std::size_t gamma)
{
    std::vector<Vertex> trail;
    VertexSet on_trail(g.order());
    auto grow = [&](auto&& self) -> bool {
        auto last = trail.empty() ? anchor : trail.back();
        if (trail.size() == gamma) {
            return g.adjacent(last, w);
        }
        for (Vertex x : g.neighbors(last)) {
            if (u_set.contains(x) || on_trail.contains(x) || x == w) {
                continue;
            }
            auto touching = neighbour_list_in(g, x, u_set);
            bool ok = trail.empty() ? (touching.size() == 1 && touching.front() == anchor) : touching.empty();
            if (!ok) {
                continue;
            }
            trail.push_back(x);
            on_trail.insert(x);
            bool found = self(self);
            on_trail.erase(x);
            trail.pop_back();
            if (found) {
                return true;
            }
        }
        return false;
    };
    return grow(grow);
}

// Some w outside U can be attached to the deficient vertex u and hung off
// `anchor` by a P_{gamma+2}.
bool extension_exists(const Graph& g, const VertexSet& u_set, Vertex u, Vertex anchor, std::size_t gamma)
{
    for (Vertex w : g.neighbors(u)) {
        if (u_set.contains(w)) {
            continue;
        }
        auto touching = neighbour_list_in(g, w, u_set);
        if (gamma == 0) {
            std::sort(touching.begin(), touching.end());
            std::vector<Vertex> expected{u, anchor};
            std::sort(expected.begin(), expected.end());
            if (u != anchor && touching == expected) {
                return true;
            }
            continue;
        }
        if (touching.size() == 1 && hanging_path(g, u_set, anchor, w, gamma)) {
            return true;
        }
    }
    return false;
}

std::vector<Vertex> low_degree(const Graph& g, const VertexSet& s)
{
    std::vector<Vertex> out;
    for (Vertex v : s.members()) {
        if (neighbours_in(g, v, s) <= 1) {
            out.push_back(v);
        }
    }
    return out;
}

} // namespace

bool builtin_max(const Graph& g, const VertexSet& x)
{
    return is_dominating(g, x);
}

bool builtin_isoW(const Graph& g, const VertexSet& x, std::size_t gamma, std::size_t r)
{
    auto s = x.size();
    for (std::size_t a = 1;; ++a) {
        auto w = omega_checked(r, a);
        if (!w || a + (gamma + 1) * *w > s) {
            return false;
        }
        WitnessParams p{a, gamma, r};
        if (w_vertex_count(p) != s) {
            continue;
        }
        auto members = x.members();
        auto h = g.induced(members);
        if (h.edge_count() != w_edge_count(p)) {
            return false;
        }
        auto result = find_induced_W(h, p);
        if (result.outcome == Outcome::BudgetExceeded) {
            throw BudgetExceeded(result.expansions);
        }
        return result.outcome == Outcome::Found;
    }
}

bool builtin_isoW_roles(const Graph& g, const VertexSet& x1, const VertexSet& x2, const VertexSet& c,
                        std::size_t gamma, std::size_t r)
{
    if (!pairwise_disjoint({&x1, &x2, &c}) || x1.empty()) {
        return false;
    }
    WitnessParams p{x1.size(), gamma, r};
    auto w = omega_checked(r, p.a);
    if (!w || x2.size() != *w || c.size() != gamma * *w) {
        return false;
    }
    std::vector<Vertex> members;
    for (const auto* s : {&x1, &x2, &c}) {
        auto part = s->members();
        members.insert(members.end(), part.begin(), part.end());
    }
    std::vector<std::uint32_t> host_colors;
    host_colors.insert(host_colors.end(), x1.size(), 0);
    host_colors.insert(host_colors.end(), x2.size(), 1);
    host_colors.insert(host_colors.end(), c.size(), 2);
    auto h = g.induced(members);
    auto pattern = build_W(p);
    if (h.edge_count() != pattern.graph.edge_count()) {
        return false;
    }
    std::vector<std::uint32_t> pattern_colors;
    for (Role role : pattern.roles) {
        pattern_colors.push_back(role == Role::F1 ? 0 : role == Role::F2 ? 1 : 2);
    }
    InducedMatcher matcher(pattern.graph, h);
    matcher.set_colors(std::move(pattern_colors), std::move(host_colors));
    return matcher.run([](std::span<const Vertex>) { return false; }) > 0;
}

bool builtin_phi_star(const Graph& g, const VertexSet& x1, const VertexSet& x2, const VertexSet& c,
                      std::size_t gamma)
{
    if (!pairwise_disjoint({&x1, &x2, &c}) || x1.size() != x2.size()) {
        return false;
    }
    auto n = g.order();
    auto ends_set = unite({&x1, &x2}, n);
    std::map<Vertex, std::size_t> degree1;
    std::map<Vertex, std::size_t> degree2;
    if (gamma == 0) {
        if (!c.empty()) {
            return false;
        }
        for (Vertex v : x1.members()) {
            if (neighbours_in(g, v, x2) != 1) {
                return false;
            }
        }
        for (Vertex v : x2.members()) {
            if (neighbours_in(g, v, x1) != 1) {
                return false;
            }
        }
        return true;
    }
    for (const auto& comp : components(g, c)) {
        if (comp.size() != gamma || !induces_path(g, comp, c)) {
            return false;
        }
        auto ends = path_ends(g, comp, c);
        for (Vertex v : comp) {
            bool is_end = v == ends[0] || v == ends[1];
            if (!is_end && neighbours_in(g, v, ends_set) != 0) {
                return false;
            }
        }
        std::vector<Vertex> attached;
        if (gamma == 1) {
            attached = neighbour_list_in(g, ends[0], ends_set);
            if (attached.size() != 2) {
                return false;
            }
        } else {
            for (Vertex e : ends) {
                auto nb = neighbour_list_in(g, e, ends_set);
                if (nb.size() != 1) {
                    return false;
                }
                attached.push_back(nb.front());
            }
        }
        auto in1 = x1.contains(attached[0]) ? attached[0] : attached[1];
        auto in2 = x1.contains(attached[0]) ? attached[1] : attached[0];
        if (!x1.contains(in1) || !x2.contains(in2)) {
            return false;
        }
        ++degree1[in1];
        ++degree2[in2];
    }
    for (Vertex v : x1.members()) {
        if (degree1[v] != 1) {
            return false;
        }
    }
    for (Vertex v : x2.members()) {
        if (degree2[v] != 1) {
            return false;
        }
    }
    return true;
}

bool builtin_paths(const Graph& g, const VertexSet& x1, const VertexSet& x2, const VertexSet& tx1,
                   const VertexSet& c1, const VertexSet& c2, std::size_t gamma)
{
    auto down = links(g, x1, x2, c1, gamma);
    auto across = links(g, x2, tx1, c2, gamma);
    for (Vertex root : x1.members()) {
        std::vector<Vertex> images;
        for (const auto& [from, to] : down) {
            if (from != root) {
                continue;
            }
            std::vector<Vertex> img;
            for (const auto& [s, t] : across) {
                if (s == to) {
                    img.push_back(t);
                }
            }
            if (img.size() != 1) {
                return false;
            }
            images.push_back(img.front());
        }
        if (images.empty()) {
            continue;
        }
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
            return false;
        }
        VertexSet image_set(g.order(), std::span<const Vertex>(images));
        if (!induces_path(g, images, image_set)) {
            return false;
        }
    }
    return true;
}

bool builtin_last(const Graph& g, const VertexSet& x, const VertexSet& z, Vertex y, const VertexSet& c,
                  std::size_t gamma)
{
    if (y >= g.order() || x.contains(y) || z.contains(y) || c.contains(y)) {
        return false;
    }
    auto on_x = neighbour_list_in(g, y, x);
    if (on_x.size() != 1 || neighbours_in(g, on_x.front(), x) > 1) {
        return false;
    }
    if (gamma == 0) {
        if (!c.empty()) {
            return false;
        }
        for (Vertex v : z.members()) {
            if (!g.adjacent(v, y)) {
                return false;
            }
        }
        return true;
    }
    VertexSet lasts(g.order());
    for (const auto& comp : components(g, c)) {
        if (comp.size() != gamma || !induces_path(g, comp, c)) {
            return false;
        }
        auto ends = path_ends(g, comp, c);
        std::vector<Vertex> firsts;
        for (Vertex v : comp) {
            if (g.adjacent(v, y)) {
                firsts.push_back(v);
            }
        }
        if (firsts.size() != 1 || (firsts.front() != ends[0] && firsts.front() != ends[1])) {
            return false;
        }
        auto last = firsts.front() == ends[0] ? ends[1] : ends[0];
        if (neighbours_in(g, last, z) != 1) {
            return false;
        }
        lasts.insert(last);
    }
    for (Vertex v : z.members()) {
        auto nb = neighbour_list_in(g, v, c);
        if (nb.size() != 1 || !lasts.contains(nb.front())) {
            return false;
        }
    }
    return true;
}

bool builtin_leaves(const Graph& g, const VertexSet& x, const VertexSet& z, std::size_t r)
{
    for (Vertex v : z.members()) {
        auto nb = neighbour_list_in(g, v, x);
        if (nb.size() != 1 || neighbours_in(g, nb.front(), x) > 1) {
            return false;
        }
        if (neighbours_in(g, v, z) != 0) {
            return false;
        }
    }
    for (Vertex v : x.members()) {
        if (neighbours_in(g, v, z) > r) {
            return false;
        }
    }
    return true;
}

bool builtin_even(const Graph&, const VertexSet& x)
{
    return x.size() % 2 == 0;
}

bool builtin_disjoint(std::span<const VertexSet> sets)
{
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (sets[i].intersects(sets[j])) {
                return false;
            }
        }
    }
    return true;
}

bool builtin_edges(const Graph& g, std::span<const VertexSet> sets)
{
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (Vertex u : sets[i].members()) {
            for (Vertex v : g.neighbors(u)) {
                for (std::size_t j = 0; j < sets.size(); ++j) {
                    if (j != i && sets[j].contains(v)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool builtin_max2(const Graph& g, const Max2Args& args, std::size_t gamma, std::size_t r)
{
    auto n = g.order();
    if (args.y >= n || args.ty >= n) {
        return false;
    }
    auto u_set = unite({&args.x1, &args.x2, &args.tx1, &args.tx2, &args.ty1, &args.ty2, &args.z, &args.tz,
                        &args.c[0], &args.c[1], &args.c[2], &args.c[3], &args.c[4], &args.c[5], &args.c[6]},
                       n);
    u_set.insert(args.y);
    u_set.insert(args.ty);

    auto tree_leaves = low_degree(g, args.x2);
    auto top_leaves = low_degree(g, args.ty2);
    auto tree_full = std::all_of(tree_leaves.begin(), tree_leaves.end(),
                                 [&](Vertex u) { return neighbours_in(g, u, args.z) == r; });
    auto top_full = std::all_of(top_leaves.begin(), top_leaves.end(),
                                [&](Vertex u) { return neighbours_in(g, u, args.tz) == r; });

    if (tree_full && top_full) {
        for (Vertex w : g.neighbors(args.y)) {
            if (!u_set.contains(w) && neighbours_in(g, w, u_set) == 1) {
                return false;
            }
        }
    }
    for (Vertex u : top_leaves) {
        if (neighbours_in(g, u, args.tz) <= r - 1 && extension_exists(g, u_set, u, args.ty, gamma)) {
            return false;
        }
    }
    if (top_full) {
        for (Vertex u : tree_leaves) {
            if (neighbours_in(g, u, args.z) <= r - 1 && extension_exists(g, u_set, u, args.y, gamma)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

std::size_t param(const std::map<std::string, long>& params, const char* key)
{
    auto v = params.at(key);
    if (v < 0) {
        throw InvalidArgument(std::string("builtin parameter ") + key + " must be non-negative");
    }
    return static_cast<std::size_t>(v);
}

std::vector<BuiltinSpec> make_registry()
{
    using S = std::span<const VertexSet>;
    using V = std::span<const Vertex>;
    using P = const std::map<std::string, long>&;
    const std::map<std::string, long> gr{{"gamma", 0}, {"r", 4}};
    const std::map<std::string, long> gm{{"gamma", 0}};
    const std::map<std::string, long> rr{{"r", 4}};
    constexpr auto set = ArgKind::Set;
    constexpr auto vtx = ArgKind::Vertex;

    std::vector<BuiltinSpec> out;
    out.push_back({"max", {set}, false, {}, [](const Graph& g, S s, V, P) { return builtin_max(g, s[0]); }});
    out.push_back({"isoW", {set}, false, gr, [](const Graph& g, S s, V, P p) {
                       return builtin_isoW(g, s[0], param(p, "gamma"), param(p, "r"));
                   }});
    out.push_back({"isoWroles", {set, set, set}, false, gr, [](const Graph& g, S s, V, P p) {
                       return builtin_isoW_roles(g, s[0], s[1], s[2], param(p, "gamma"), param(p, "r"));
                   }});
    out.push_back({"phistar", {set, set, set}, false, gm, [](const Graph& g, S s, V, P p) {
                       return builtin_phi_star(g, s[0], s[1], s[2], param(p, "gamma"));
                   }});
    out.push_back({"paths", {set, set, set, set, set}, false, gm, [](const Graph& g, S s, V, P p) {
                       return builtin_paths(g, s[0], s[1], s[2], s[3], s[4], param(p, "gamma"));
                   }});
    out.push_back({"last", {set, set, vtx, set}, false, gm, [](const Graph& g, S s, V v, P p) {
                       return builtin_last(g, s[0], s[1], v[0], s[2], param(p, "gamma"));
                   }});
    out.push_back({"leaves", {set, set}, false, rr, [](const Graph& g, S s, V, P p) {
                       return builtin_leaves(g, s[0], s[1], param(p, "r"));
                   }});
    out.push_back({"even", {set}, false, {}, [](const Graph& g, S s, V, P) { return builtin_even(g, s[0]); }});
    out.push_back({"disjoint", {set, set}, true, {}, [](const Graph&, S s, V, P) { return builtin_disjoint(s); }});
    out.push_back({"edges", {set, set}, true, {}, [](const Graph& g, S s, V, P) { return builtin_edges(g, s); }});

    std::vector<ArgKind> max2_args(15, set);
    max2_args.push_back(vtx);
    max2_args.push_back(vtx);
    out.push_back({"max2", max2_args, false, gr, [](const Graph& g, S s, V v, P p) {
                       Max2Args a{s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7],
                                  {s[8], s[9], s[10], s[11], s[12], s[13], s[14]}, v[0], v[1]};
                       return builtin_max2(g, a, param(p, "gamma"), param(p, "r"));
                   }});
    return out;
}

} // namespace

const std::vector<BuiltinSpec>& builtin_registry()
{
    static const std::vector<BuiltinSpec> registry = make_registry();
    return registry;
}

std::optional<std::size_t> find_builtin(const std::string& name)
{
    const auto& reg = builtin_registry();
    for (std::size_t k = 0; k < reg.size(); ++k) {
        if (reg[k].name == name) {
            return k;
        }
    }
    return std::nullopt;
}

} // namespace emso
