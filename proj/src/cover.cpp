#include "dpcolor/cover.hpp"

#include "dpcolor/errors.hpp"
#include "rng.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace dpc {

namespace {

bool contains(const ColorList& list, Color c)
{
    return std::binary_search(list.begin(), list.end(), c);
}

std::string edge_name(const Edge& e)
{
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

} // namespace

void validate_instance(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m)
{
    if (lists.size() != static_cast<std::size_t>(g.num_vertices()))
        throw InstanceError("list assignment covers " + std::to_string(lists.size()) + " vertices, graph has "
                            + std::to_string(g.num_vertices()));
    for (std::size_t v = 0; v < lists.size(); ++v) {
        const auto& list = lists[v];
        if (list.empty())
            throw InstanceError("empty list at vertex " + std::to_string(v));
        if (!std::is_sorted(list.begin(), list.end()) || std::adjacent_find(list.begin(), list.end()) != list.end())
            throw InstanceError("list at vertex " + std::to_string(v) + " is not a sorted set");
    }
    if (m.pairs.size() != g.num_edges())
        throw InstanceError("matching assignment has " + std::to_string(m.pairs.size()) + " entries, graph has "
                            + std::to_string(g.num_edges()) + " edges");
    for (std::size_t id = 0; id < g.num_edges(); ++id) {
        const auto& e = g.edges()[id];
        std::set<Color> left, right;
        for (auto [a, b] : m.pairs[id]) {
            if (!contains(lists[e.u], a) || !contains(lists[e.v], b))
                throw InstanceError("edge " + edge_name(e) + ": pair (" + std::to_string(a) + "," + std::to_string(b)
                                    + ") references a color absent from a list");
            if (!left.insert(a).second || !right.insert(b).second)
                throw InstanceError("edge " + edge_name(e) + ": pairs do not form a matching");
        }
    }
}

std::optional<Color> matched_color(const Graph& g, const MatchingAssignment& m, Vertex from, Color c, Vertex to)
{
    const auto id = g.edge_id(from, to);
    if (!id || *id >= m.pairs.size())
        return std::nullopt;
    const bool forward = from < to;
    for (auto [a, b] : m.pairs[*id]) {
        if (forward && a == c)
            return b;
        if (!forward && b == c)
            return a;
    }
    return std::nullopt;
}

std::vector<Color> nk(int k)
{
    if (k < 1)
        throw PreconditionError("N_k needs k >= 1");
    const int r = k / 2;
    std::vector<Color> out;
    for (int i = -r; i <= r; ++i)
        if (i != 0 || k % 2 == 1)
            out.push_back(i);
    return out;
}

ListAssignment full_lists(const Graph& g, int t)
{
    if (t < 1)
        throw PreconditionError("lists need t >= 1");
    ColorList list(static_cast<std::size_t>(t));
    for (int c = 1; c <= t; ++c)
        list[c - 1] = c;
    return ListAssignment(static_cast<std::size_t>(g.num_vertices()), list);
}

MatchingAssignment identity_matchings(const Graph& g, const ListAssignment& lists)
{
    MatchingAssignment m;
    m.pairs.resize(g.num_edges());
    for (std::size_t id = 0; id < g.num_edges(); ++id) {
        const auto& e = g.edges()[id];
        ColorList common;
        std::set_intersection(lists[e.u].begin(), lists[e.u].end(), lists[e.v].begin(), lists[e.v].end(),
                              std::back_inserter(common));
        for (Color c : common)
            m.pairs[id].emplace_back(c, c);
    }
    return m;
}

std::pair<ListAssignment, MatchingAssignment> signed_instance(const SignedGraph& sg, int k)
{
    if (sg.signs.size() != sg.graph.num_edges())
        throw InstanceError("signed graph needs one sign per edge");
    const auto colors = nk(k);
    ListAssignment lists(static_cast<std::size_t>(sg.graph.num_vertices()), colors);
    MatchingAssignment m;
    m.pairs.resize(sg.graph.num_edges());
    for (std::size_t id = 0; id < sg.graph.num_edges(); ++id) {
        const int sign = sg.signs[id];
        if (sign != 1 && sign != -1)
            throw InstanceError("edge sign must be +1 or -1");
        for (Color i : colors)
            m.pairs[id].emplace_back(i, sign * i);
    }
    return {std::move(lists), std::move(m)};
}

MatchingAssignment random_matchings(const Graph& g, const ListAssignment& lists, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    MatchingAssignment m;
    m.pairs.resize(g.num_edges());
    for (std::size_t id = 0; id < g.num_edges(); ++id) {
        const auto& e = g.edges()[id];
        const auto& lu = lists[e.u];
        const auto& lv = lists[e.v];
        const bool u_small = lu.size() <= lv.size();
        const auto& small = u_small ? lu : lv;
        auto large = u_small ? lv : lu;
        detail::shuffle(large, rng);
        auto& pairs = m.pairs[id];
        for (std::size_t i = 0; i < small.size(); ++i)
            pairs.push_back(u_small ? ColorPair{small[i], large[i]} : ColorPair{large[i], small[i]});
        std::sort(pairs.begin(), pairs.end());
    }
    return m;
}

std::pair<ListAssignment, MatchingAssignment> twist(const Graph& g, const ListAssignment& lists,
                                                    const MatchingAssignment& m, const Twist& pi)
{
    if (pi.size() != lists.size())
        throw PreconditionError("twist needs one bijection per vertex");
    ListAssignment out_lists(lists.size());
    for (std::size_t v = 0; v < lists.size(); ++v) {
        const auto& map = pi[v];
        if (map.size() != lists[v].size())
            throw PreconditionError("twist at vertex " + std::to_string(v) + " is not a bijection on its list");
        for (Color c : lists[v]) {
            auto it = map.find(c);
            if (it == map.end())
                throw PreconditionError("twist at vertex " + std::to_string(v) + " misses color " + std::to_string(c));
            out_lists[v].push_back(it->second);
        }
        std::sort(out_lists[v].begin(), out_lists[v].end());
        if (std::adjacent_find(out_lists[v].begin(), out_lists[v].end()) != out_lists[v].end())
            throw PreconditionError("twist at vertex " + std::to_string(v) + " is not injective");
    }
    MatchingAssignment out;
    out.pairs.resize(m.pairs.size());
    for (std::size_t id = 0; id < m.pairs.size(); ++id) {
        const auto& e = g.edges()[id];
        for (auto [a, b] : m.pairs[id])
            out.pairs[id].emplace_back(pi[e.u].at(a), pi[e.v].at(b));
        std::sort(out.pairs[id].begin(), out.pairs[id].end());
    }
    return {std::move(out_lists), std::move(out)};
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> CoverGraph::index_of(Vertex u, Color c) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), std::pair{u, c});
    if (it == vertices.end() || *it != std::pair{u, c})
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

bool CoverGraph::adjacent(std::size_t a, std::size_t b) const
{
    auto key = std::minmax(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::pair{key.first, key.second});
}

CoverGraph build_cover(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m)
{
    validate_instance(g, lists, m);
    CoverGraph cover;
    std::vector<std::size_t> fiber_start;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        fiber_start.push_back(cover.vertices.size());
        for (Color c : lists[u])
            cover.vertices.emplace_back(u, c);
    }
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        const std::size_t base = fiber_start[u];
        for (std::size_t i = 0; i < lists[u].size(); ++i)
            for (std::size_t j = i + 1; j < lists[u].size(); ++j)
                cover.edges.emplace_back(base + i, base + j);
    }
    cover.fiber_edges = cover.edges.size();
    for (std::size_t id = 0; id < g.num_edges(); ++id) {
        const auto& e = g.edges()[id];
        for (auto [a, b] : m.pairs[id]) {
            auto x = *cover.index_of(e.u, a);
            auto y = *cover.index_of(e.v, b);
            cover.edges.emplace_back(std::min(x, y), std::max(x, y));
        }
    }
    cover.cross_edges = cover.edges.size() - cover.fiber_edges;
    std::sort(cover.edges.begin(), cover.edges.end());
    return cover;
}

bool is_independent_transversal(const CoverGraph& cover, const Graph& g, const Coloring& f)
{
    if (f.size() != static_cast<std::size_t>(g.num_vertices()))
        return false;
    std::vector<std::size_t> chosen;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        if (!f[u])
            return false;
        auto idx = cover.index_of(u, *f[u]);
        if (!idx)
            return false;
        chosen.push_back(*idx);
    }
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = i + 1; j < chosen.size(); ++j)
            if (cover.adjacent(chosen[i], chosen[j]))
                return false;
    return true;
}

// ---------------------------------------------------------------------------

std::string Violation::describe() const
{
    switch (kind) {
    case Kind::Uncolored:
        return "uncolored vertex " + std::to_string(u);
    case Kind::NotInList:
        return "vertex " + std::to_string(u) + " has color " + std::to_string(cu) + " not in its list";
    case Kind::MatchedEdge:
        return "edge " + std::to_string(u) + "-" + std::to_string(v) + " joins matched colors (" + std::to_string(cu)
               + "," + std::to_string(cv) + ")";
    }
    return {};
}

std::vector<Violation> verify_coloring(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m,
                                       const Coloring& f)
{
    std::vector<Violation> out;
    auto color_of = [&](Vertex v) -> std::optional<Color> {
        return static_cast<std::size_t>(v) < f.size() ? f[v] : std::nullopt;
    };
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        auto c = color_of(u);
        if (!c) {
            out.push_back({Violation::Kind::Uncolored, u});
            continue;
        }
        if (static_cast<std::size_t>(u) >= lists.size() || !contains(lists[u], *c))
            out.push_back({Violation::Kind::NotInList, u, 0, *c});
    }
    for (std::size_t id = 0; id < g.num_edges(); ++id) {
        const auto& e = g.edges()[id];
        auto cu = color_of(e.u), cv = color_of(e.v);
        if (!cu || !cv || id >= m.pairs.size())
            continue;
        const ColorPair chosen{*cu, *cv};
        if (std::find(m.pairs[id].begin(), m.pairs[id].end(), chosen) != m.pairs[id].end())
            out.push_back({Violation::Kind::MatchedEdge, e.u, e.v, *cu, *cv});
    }
    return out;
}

} // namespace dpc
