#include "dpcolor/graph.hpp"

#include "dpcolor/errors.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

namespace dpc {

Graph::Graph(int n)
    : adjacency_(static_cast<std::size_t>(n))
    , incident_(static_cast<std::size_t>(n))
{
    if (n < 0)
        throw InstanceError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    Graph g(n);
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw InstanceError("edge " + std::to_string(a) + " " + std::to_string(b) + ": endpoint out of range");
        if (a == b)
            throw InstanceError("self-loop at vertex " + std::to_string(a));
        g.edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        throw InstanceError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));

    for (std::size_t id = 0; id < g.edges_.size(); ++id) {
        const auto [u, v] = g.edges_[id];
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& adj = g.adjacency_[v];
        std::sort(adj.begin(), adj.end());
        auto& inc = g.incident_[v];
        inc.reserve(adj.size());
        for (Vertex w : adj)
            inc.push_back(*g.edge_id(v, w));
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        return false;
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<std::size_t> Graph::edge_id(Vertex u, Vertex v) const
{
    const Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

int Graph::min_degree() const
{
    int d = 0;
    for (Vertex v = 0; v < num_vertices(); ++v)
        d = v == 0 ? degree(v) : std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const
{
    int d = 0;
    for (Vertex v = 0; v < num_vertices(); ++v)
        d = std::max(d, degree(v));
    return d;
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, int line)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

} // namespace

Graph parse_graph(std::string_view text)
{
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto toks = tokens(line);
        if (toks.empty() || toks.front().front() == '#')
            continue;
        if (toks.size() != 2)
            throw ParseError(line_no, "expected two integers");
        const long long a = to_int(toks[0], line_no);
        const long long b = to_int(toks[1], line_no);
        if (!have_header) {
            if (a < 0 || b < 0)
                throw ParseError(line_no, "negative vertex or edge count");
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(line_no, "more edge lines than the declared " + std::to_string(m));
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw ParseError(line_no, "endpoint out of range 0.." + std::to_string(n - 1));
        if (a == b)
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        const std::pair<Vertex, Vertex> key{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
        if (!seen.insert(key).second)
            throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header)
        throw ParseError(0, "missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string format_graph(const Graph& g)
{
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Generators

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void add_cycle(EdgeList& edges, Vertex first, int len)
{
    for (int i = 0; i < len; ++i)
        edges.emplace_back(first + i, first + (i + 1) % len);
}

Graph dodecahedron()
{
    // Generalized Petersen graph GP(10, 2).
    EdgeList edges;
    add_cycle(edges, 0, 10);
    for (int i = 0; i < 10; ++i) {
        edges.emplace_back(i, 10 + i);
        edges.emplace_back(10 + i, 10 + (i + 2) % 10);
    }
    return Graph::from_edges(20, edges);
}

Graph icosahedron()
{
    // Apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11.
    EdgeList edges;
    for (int i = 0; i < 5; ++i) {
        const int up = 1 + i, up_next = 1 + (i + 1) % 5;
        const int lo = 6 + i, lo_next = 6 + (i + 1) % 5;
        edges.emplace_back(0, up);
        edges.emplace_back(up, up_next);
        edges.emplace_back(up, lo);
        edges.emplace_back(up, lo_next);
        edges.emplace_back(lo, lo_next);
        edges.emplace_back(11, lo);
    }
    return Graph::from_edges(12, edges);
}

void require(bool ok, std::string_view family, int parameter)
{
    if (!ok)
        throw PreconditionError("parameter " + std::to_string(parameter) + " out of range for family '"
                                + std::string(family) + "'");
}

} // namespace

std::vector<std::string> family_names()
{
    return {"cycle", "complete", "path", "star", "grid", "wheel", "prism", "cube",
            "octahedron", "icosahedron", "dodecahedral", "dodecahedral-line"};
}

Graph generate(std::string_view family, int parameter)
{
    EdgeList edges;
    if (family == "cycle") {
        require(parameter >= 3, family, parameter);
        add_cycle(edges, 0, parameter);
        return Graph::from_edges(parameter, edges);
    }
    if (family == "complete") {
        require(parameter >= 1, family, parameter);
        for (int u = 0; u < parameter; ++u)
            for (int v = u + 1; v < parameter; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edges(parameter, edges);
    }
    if (family == "path") {
        require(parameter >= 1, family, parameter);
        for (int v = 0; v + 1 < parameter; ++v)
            edges.emplace_back(v, v + 1);
        return Graph::from_edges(parameter, edges);
    }
    if (family == "star") {
        require(parameter >= 1, family, parameter);
        for (int v = 1; v < parameter; ++v)
            edges.emplace_back(0, v);
        return Graph::from_edges(parameter, edges);
    }
    if (family == "grid") {
        require(parameter >= 1, family, parameter);
        const int k = parameter;
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) {
                if (c + 1 < k)
                    edges.emplace_back(r * k + c, r * k + c + 1);
                if (r + 1 < k)
                    edges.emplace_back(r * k + c, (r + 1) * k + c);
            }
        return Graph::from_edges(k * k, edges);
    }
    if (family == "wheel") {
        // Hub 0 and a rim cycle on 1..parameter.
        require(parameter >= 3, family, parameter);
        add_cycle(edges, 1, parameter);
        for (int v = 1; v <= parameter; ++v)
            edges.emplace_back(0, v);
        return Graph::from_edges(parameter + 1, edges);
    }
    if (family == "prism" || family == "cube") {
        const int k = family == "cube" ? 4 : parameter;
        require(k >= 3, family, parameter);
        add_cycle(edges, 0, k);
        add_cycle(edges, k, k);
        for (int i = 0; i < k; ++i)
            edges.emplace_back(i, k + i);
        return Graph::from_edges(2 * k, edges);
    }
    if (family == "octahedron") {
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (v != u + 3)
                    edges.emplace_back(u, v);
        return Graph::from_edges(6, edges);
    }
    if (family == "icosahedron")
        return icosahedron();
    if (family == "dodecahedral")
        return dodecahedron();
    if (family == "dodecahedral-line")
        return line_graph(dodecahedron());
    throw PreconditionError("unknown family '" + std::string(family) + "'");
}

Graph random_tree(int n, std::uint64_t seed)
{
    if (n < 1)
        throw PreconditionError("tree needs at least one vertex");
    EdgeList edges;
    if (n == 2)
        edges.emplace_back(0, 1);
    if (n > 2) {
        std::mt19937_64 rng(seed);
        std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
        for (auto& x : pruefer)
            x = static_cast<int>(detail::bounded(rng, static_cast<std::uint64_t>(n)));
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int x : pruefer)
            ++degree[x];
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1)
                leaves.insert(v);
        for (int x : pruefer) {
            const int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, x);
            if (--degree[x] == 1)
                leaves.insert(x);
        }
        edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
    }
    return Graph::from_edges(n, edges);
}

Graph line_graph(const Graph& g)
{
    EdgeList edges;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                edges.emplace_back(static_cast<Vertex>(inc[i]), static_cast<Vertex>(inc[j]));
    }
    // Simple host: two edges share at most one endpoint, so no duplicates.
    return Graph::from_edges(static_cast<int>(g.num_edges()), edges);
}

// ---------------------------------------------------------------------------
// Degeneracy

DegeneracyReport degeneracy(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<bool> removed(static_cast<std::size_t>(n), false);

    DegeneracyReport report;
    report.ordering.reserve(static_cast<std::size_t>(n));
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = true;
        report.degeneracy = std::max(report.degeneracy, d);
        report.ordering.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w])
                continue;
            queue.erase({deg[w], w});
            queue.emplace(--deg[w], w);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Cycles

std::optional<CycleWitness> find_cycle(const Graph& g, int k)
{
    const int n = g.num_vertices();
    if (k < 3 || k > n)
        return std::nullopt;

    CycleWitness path;
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);

    std::function<bool(Vertex)> extend = [&](Vertex start) -> bool {
        const Vertex last = path.back();
        if (static_cast<int>(path.size()) == k)
            return g.has_edge(last, start);
        for (Vertex w : g.neighbors(last)) {
            if (w <= start || on_path[w])
                continue;
            path.push_back(w);
            on_path[w] = true;
            if (extend(start))
                return true;
            on_path[w] = false;
            path.pop_back();
        }
        return false;
    };

    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path[s] = true;
        if (extend(s))
            return path;
        on_path[s] = false;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// F_5^3 gadget

bool is_f53(const Graph& g, const F53Witness& w)
{
    for (std::size_t i = 0; i < 6; ++i) {
        if (w.v[i] < 0 || w.v[i] >= g.num_vertices() || g.degree(w.v[i]) != 4)
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (w.v[i] == w.v[j])
                return false;
    }
    for (auto [a, b] : kF53Edges)
        if (!g.has_edge(w.v[a], w.v[b]))
            return false;
    int internal = 0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            internal += g.has_edge(w.v[i], w.v[j]) ? 1 : 0;
    return internal == 7;
}

namespace {

// Visits witnesses in the canonical order: chord (v2,v6) over edges with
// v2 < v6, then v1 ascending, then the path v2-v3-v4-v5-v6 by lexicographic
// DFS. The visitor returns true to stop.
template <typename Visitor>
void for_each_f53(const Graph& g, Visitor&& visit)
{
    auto deg4 = [&](Vertex x) { return g.degree(x) == 4; };
    for (const auto& chord : g.edges()) {
        const Vertex v2 = chord.u, v6 = chord.v;
        if (!deg4(v2) || !deg4(v6))
            continue;
        for (Vertex v1 : g.neighbors(v2)) {
            if (v1 == v6 || !deg4(v1) || !g.has_edge(v1, v6))
                continue;
            for (Vertex v3 : g.neighbors(v2)) {
                if (v3 == v1 || v3 == v6 || !deg4(v3))
                    continue;
                for (Vertex v4 : g.neighbors(v3)) {
                    if (v4 == v1 || v4 == v2 || v4 == v6 || !deg4(v4))
                        continue;
                    for (Vertex v5 : g.neighbors(v4)) {
                        if (v5 == v1 || v5 == v2 || v5 == v3 || v5 == v6 || !g.has_edge(v5, v6))
                            continue;
                        F53Witness w{{v1, v2, v3, v4, v5, v6}};
                        if (is_f53(g, w) && visit(w))
                            return;
                    }
                }
            }
        }
    }
}

} // namespace

std::optional<F53Witness> find_f53(const Graph& g)
{
    std::optional<F53Witness> found;
    for_each_f53(g, [&](const F53Witness& w) {
        found = w;
        return true;
    });
    return found;
}

std::size_t count_f53(const Graph& g)
{
    std::size_t count = 0;
    for_each_f53(g, [&](const F53Witness&) {
        ++count;
        return false;
    });
    return count;
}

// ---------------------------------------------------------------------------

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed)
{
    const int n = g.num_vertices();
    Subgraph sub;
    sub.old_to_new.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v : removed) {
        if (v < 0 || v >= n)
            throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
        sub.old_to_new[v] = -1;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (sub.old_to_new[v] == -1)
            continue;
        sub.old_to_new[v] = static_cast<Vertex>(sub.new_to_old.size());
        sub.new_to_old.push_back(v);
    }
    EdgeList edges;
    for (const auto& e : g.edges())
        if (sub.old_to_new[e.u] != -1 && sub.old_to_new[e.v] != -1)
            edges.emplace_back(sub.old_to_new[e.u], sub.old_to_new[e.v]);
    sub.graph = Graph::from_edges(static_cast<int>(sub.new_to_old.size()), edges);
    return sub;
}

} // namespace dpc
