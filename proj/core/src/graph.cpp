#include "emso/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

namespace emso {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size()))
{
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members) {
        insert(v);
    }
}

VertexSet VertexSet::all(std::size_t universe)
{
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) {
        s.words_[w] = ~std::uint64_t{0};
    }
    if (universe % 64 != 0) {
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    }
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask)
{
    if (universe > 64) {
        throw InvalidArgument("VertexSet::from_mask requires universe <= 64");
    }
    VertexSet s(universe);
    if (universe > 0) {
        s.words_[0] = universe == 64 ? mask : mask & ((std::uint64_t{1} << universe) - 1);
    }
    return s;
}

void VertexSet::insert(Vertex v)
{
    if (v >= universe_) {
        throw InvalidArgument("vertex " + std::to_string(v) + " outside set universe");
    }
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v)
{
    if (v < universe_) {
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
}

std::size_t VertexSet::size() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits != 0) {
            out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept
{
    auto k = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < k; ++w) {
        if ((words_[w] & other.words_[w]) != 0) {
            return true;
        }
    }
    return false;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n)
{
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        }
        if (u == v) {
            throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        }
        canon.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    m_ = canon.size();

    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : canon) {
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        offsets_[v + 1] = offsets_[v] + deg[v];
    }
    adj_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : canon) {
        adj_[fill[u]++] = v;
        adj_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }

    if (n <= kDenseLimit) {
        row_words_ = (n + 63) / 64;
        matrix_.assign(n * row_words_, 0);
        for (auto [u, v] : canon) {
            matrix_[u * row_words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
            matrix_[v * row_words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        }
    }
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

Graph Graph::complete(std::size_t n)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            e.emplace_back(u, v);
        }
    }
    return Graph(n, e);
}

Graph Graph::path(std::size_t n)
{
    std::vector<Edge> e;
    for (Vertex v = 1; v < n; ++v) {
        e.emplace_back(v - 1, v);
    }
    return Graph(n, e);
}

Graph Graph::cycle(std::size_t n)
{
    if (n < 3) {
        throw InvalidArgument("a cycle needs at least 3 vertices");
    }
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) {
        e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    }
    return Graph(n, e);
}

Graph Graph::star(std::size_t leaves)
{
    std::vector<Edge> e;
    for (Vertex v = 1; v <= leaves; ++v) {
        e.emplace_back(0, v);
    }
    return Graph(leaves + 1, e);
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept
{
    if (!matrix_.empty()) {
        return ((matrix_[u * row_words_ + (v >> 6)] >> (v & 63)) & 1u) != 0;
    }
    auto a = neighbors(u);
    auto b = neighbors(v);
    if (b.size() < a.size()) {
        return std::binary_search(b.begin(), b.end(), u);
    }
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (adjacent(vertices[i], vertices[j])) {
                e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return Graph(vertices.size(), e);
}

Graph Graph::with_isolated(std::size_t extra) const
{
    auto e = edges();
    return Graph(n_ + extra, e);
}

Graph Graph::permuted(std::span<const Vertex> perm) const
{
    if (perm.size() != n_) {
        throw InvalidArgument("permutation size does not match graph order");
    }
    std::vector<Edge> e;
    e.reserve(m_);
    for (auto [u, v] : edges()) {
        e.emplace_back(perm[u], perm[v]);
    }
    return Graph(n_, e);
}

// ------------------------------------------------------------ GraphBuilder

std::vector<Vertex> GraphBuilder::add_path(Vertex u, Vertex v, std::size_t inner)
{
    std::vector<Vertex> out;
    out.reserve(inner);
    Vertex prev = u;
    for (std::size_t k = 0; k < inner; ++k) {
        Vertex x = add_vertex();
        add_edge(prev, x);
        out.push_back(x);
        prev = x;
    }
    add_edge(prev, v);
    return out;
}

// ---------------------------------------------------------------- dominance

bool is_dominating(const Graph& g, const VertexSet& s)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        if (s.contains(v)) {
            continue;
        }
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return s.contains(u); })) {
            return false;
        }
    }
    return true;
}

// --------------------------------------------------------------- edge lists

namespace {

struct LineReader
{
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    bool next(std::string_view& line)
    {
        while (pos < text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            if (line.find_first_not_of(" \t") != std::string_view::npos) {
                return true;
            }
        }
        return false;
    }
};

[[noreturn]] void fail(std::size_t line_no, const std::string& what)
{
    throw InvalidArgument("edge list line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no)
{
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        if (i == line.size()) {
            break;
        }
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
            fail(line_no, "expected non-negative integers, got '" + std::string(line) + "'");
        }
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

} // namespace

Graph read_edge_list(std::string_view text)
{
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line)) {
        throw InvalidArgument("edge list is empty: missing header 'n m'");
    }
    auto header = parse_numbers(line, reader.line_no);
    if (header.size() != 2) {
        fail(reader.line_no, "header must be 'n m'");
    }
    auto n = header[0];
    auto m = header[1];
    std::vector<Edge> edges;
    edges.reserve(m);
    while (reader.next(line)) {
        auto uv = parse_numbers(line, reader.line_no);
        if (uv.size() != 2) {
            fail(reader.line_no, "edge line must be 'u v'");
        }
        if (uv[0] >= n || uv[1] >= n) {
            fail(reader.line_no, "vertex " + std::to_string(std::max(uv[0], uv[1])) + " out of range for n=" +
                                     std::to_string(n));
        }
        if (uv[0] == uv[1]) {
            fail(reader.line_no, "self-loop at vertex " + std::to_string(uv[0]));
        }
        edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    }
    if (edges.size() != m) {
        throw InvalidArgument("edge list header declares " + std::to_string(m) + " edges but " +
                    std::to_string(edges.size()) + " were given");
    }
    return Graph(n, edges);
}

std::string write_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidArgument("cannot open graph file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_edge_list(buf.str());
}

void write_edge_list_file(const Graph& g, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidArgument("cannot write graph file '" + path + "'");
    }
    out << write_edge_list(g);
}

} // namespace emso
