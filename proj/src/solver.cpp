#include "dpcolor/solver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace dpc {

namespace {

// Index-based view of an instance: for vertex v, its j-th incident edge and
// color index ci, partner[v][j][ci] is the matched color index at the
// neighbor, or -1.
struct CompiledInstance {
    std::vector<std::vector<std::vector<int>>> partner;

    CompiledInstance(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m)
        : partner(static_cast<std::size_t>(g.num_vertices()))
    {
        auto index_in = [&](Vertex v, Color c) {
            const auto& l = lists[v];
            return static_cast<int>(std::lower_bound(l.begin(), l.end(), c) - l.begin());
        };
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            const auto& nbrs = g.neighbors(v);
            partner[v].assign(nbrs.size(), std::vector<int>(lists[v].size(), -1));
            for (std::size_t j = 0; j < nbrs.size(); ++j) {
                const Vertex w = nbrs[j];
                const bool forward = v < w;
                for (auto [a, b] : m.pairs[g.incident_edges(v)[j]]) {
                    const Color mine = forward ? a : b;
                    const Color theirs = forward ? b : a;
                    partner[v][j][index_in(v, mine)] = index_in(w, theirs);
                }
            }
        }
    }
};

class TransversalSearch {
public:
    TransversalSearch(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m)
        : g_(g)
        , lists_(lists)
        , compiled_(g, lists, m)
        , chosen_(static_cast<std::size_t>(g.num_vertices()), -1)
        , count_(static_cast<std::size_t>(g.num_vertices()))
        , alive_(static_cast<std::size_t>(g.num_vertices()))
    {
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            count_[v] = static_cast<int>(lists[v].size());
            alive_[v].assign(lists[v].size(), 1);
        }
    }

    std::optional<Coloring> run()
    {
        if (!search(0))
            return std::nullopt;
        Coloring f(chosen_.size());
        for (std::size_t v = 0; v < chosen_.size(); ++v)
            f[v] = lists_[v][chosen_[v]];
        return f;
    }

private:
    bool search(int depth)
    {
        if (depth == g_.num_vertices())
            return true;
        Vertex best = -1;
        for (Vertex v = 0; v < g_.num_vertices(); ++v)
            if (chosen_[v] < 0 && (best < 0 || count_[v] < count_[best]))
                best = v;

        const auto& nbrs = g_.neighbors(best);
        for (int ci = 0; ci < static_cast<int>(alive_[best].size()); ++ci) {
            if (!alive_[best][ci])
                continue;
            chosen_[best] = ci;
            const std::size_t mark = trail_.size();
            bool wiped = false;
            for (std::size_t j = 0; j < nbrs.size() && !wiped; ++j) {
                const Vertex w = nbrs[j];
                const int k = compiled_.partner[best][j][ci];
                if (chosen_[w] >= 0 || k < 0 || !alive_[w][k])
                    continue;
                alive_[w][k] = 0;
                --count_[w];
                trail_.emplace_back(w, k);
                wiped = count_[w] == 0;
            }
            if (!wiped && search(depth + 1))
                return true;
            while (trail_.size() > mark) {
                auto [w, k] = trail_.back();
                trail_.pop_back();
                alive_[w][k] = 1;
                ++count_[w];
            }
            chosen_[best] = -1;
        }
        return false;
    }

    const Graph& g_;
    const ListAssignment& lists_;
    CompiledInstance compiled_;
    std::vector<int> chosen_;
    std::vector<int> count_;
    std::vector<std::vector<char>> alive_;
    std::vector<std::pair<Vertex, int>> trail_;
};

std::uint64_t product_size(const ListAssignment& lists, std::uint64_t limit)
{
    std::uint64_t total = 1;
    for (const auto& l : lists) {
        if (l.empty())
            return 0;
        if (total > limit / l.size())
            throw GuardExceeded("search space exceeds the limit of " + std::to_string(limit));
        total *= l.size();
    }
    if (total > limit)
        throw GuardExceeded("search space exceeds the limit of " + std::to_string(limit));
    return total;
}

// Visits every f with f(v) in lists[v], vertex 0 most significant, until the
// predicate accepts one.
template <typename Accept>
std::optional<Coloring> enumerate_products(const ListAssignment& lists, std::uint64_t limit, Accept&& accept)
{
    if (product_size(lists, limit) == 0)
        return std::nullopt;
    const std::size_t n = lists.size();
    std::vector<std::size_t> idx(n, 0);
    Coloring f(n);
    while (true) {
        for (std::size_t v = 0; v < n; ++v)
            f[v] = lists[v][idx[v]];
        if (accept(f))
            return f;
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < lists[pos].size())
                break;
            idx[pos] = 0;
            if (pos == 0)
                return std::nullopt;
        }
        if (n == 0)
            return std::nullopt;
    }
}

} // namespace

std::optional<Coloring> solve_transversal(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m)
{
    validate_instance(g, lists, m);
    return TransversalSearch(g, lists, m).run();
}

std::optional<Coloring> brute_force_transversal(const Graph& g, const ListAssignment& lists,
                                                const MatchingAssignment& m, std::uint64_t limit)
{
    validate_instance(g, lists, m);
    return enumerate_products(lists, limit, [&](const Coloring& f) {
        for (std::size_t id = 0; id < g.num_edges(); ++id) {
            const auto& e = g.edges()[id];
            const ColorPair chosen{*f[e.u], *f[e.v]};
            if (std::find(m.pairs[id].begin(), m.pairs[id].end(), chosen) != m.pairs[id].end())
                return false;
        }
        return true;
    });
}

// ---------------------------------------------------------------------------
// Exact DP-chromatic number

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> spanning_forest_split(const Graph& g)
{
    std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()), false);
    std::vector<bool> in_forest(g.num_edges(), false);
    for (Vertex root = 0; root < g.num_vertices(); ++root) {
        if (seen[root])
            continue;
        seen[root] = true;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            const auto& nbrs = g.neighbors(v);
            for (std::size_t j = 0; j < nbrs.size(); ++j) {
                if (seen[nbrs[j]])
                    continue;
                seen[nbrs[j]] = true;
                in_forest[g.incident_edges(v)[j]] = true;
                queue.push_back(nbrs[j]);
            }
        }
    }
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split;
    for (std::size_t id = 0; id < g.num_edges(); ++id)
        (in_forest[id] ? split.first : split.second).push_back(id);
    return split;
}

ChromaticCertificate dp_chromatic(const Graph& g, int t_max, const ChromaticOptions& options)
{
    if (t_max < 1)
        throw PreconditionError("max t must be at least 1");
    const auto [forest, free] = spanning_forest_split(g);
    if (static_cast<int>(free.size()) > options.max_free_edges)
        throw GuardExceeded("graph has " + std::to_string(free.size()) + " free edges, limit is "
                            + std::to_string(options.max_free_edges));

    ChromaticCertificate cert;
    cert.max_t = t_max;
    for (auto id : forest)
        cert.forest.push_back(g.edges()[id]);
    for (auto id : free)
        cert.free_edges.push_back(g.edges()[id]);

    for (int t = 1; t <= t_max; ++t) {
        std::vector<std::vector<Color>> perms;
        std::vector<Color> perm(static_cast<std::size_t>(t));
        std::iota(perm.begin(), perm.end(), 1);
        do
            perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free.size(); ++i) {
            if (total > options.max_assignments / perms.size())
                throw GuardExceeded("more than " + std::to_string(options.max_assignments)
                                    + " normalized assignments at t=" + std::to_string(t));
            total *= perms.size();
        }

        const auto lists = full_lists(g, t);
        MatchingAssignment m = identity_matchings(g, lists);
        std::vector<std::size_t> idx(free.size(), 0);
        auto load = [&](std::size_t i) {
            auto& pairs = m.pairs[free[i]];
            pairs.clear();
            for (int a = 1; a <= t; ++a)
                pairs.emplace_back(a, perms[idx[i]][a - 1]);
        };
        for (std::size_t i = 0; i < free.size(); ++i)
            load(i);

        bool failed = false;
        std::uint64_t searched = 0;
        while (true) {
            ++searched;
            if (!TransversalSearch(g, lists, m).run()) {
                failed = true;
                break;
            }
            std::size_t pos = free.size();
            bool done = true;
            while (pos > 0) {
                --pos;
                if (++idx[pos] < perms.size()) {
                    load(pos);
                    done = false;
                    break;
                }
                idx[pos] = 0;
                load(pos);
            }
            if (done)
                break;
        }
        cert.assignments_searched = searched;
        if (!failed) {
            cert.value = t;
            return cert;
        }
        cert.failing_t = t;
        cert.failing = m;
    }
    cert.value = t_max + 1;
    cert.exceeds_max_t = true;
    return cert;
}

// ---------------------------------------------------------------------------

Coloring greedy_degenerate_color(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m)
{
    validate_instance(g, lists, m);
    const auto report = degeneracy(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (static_cast<int>(lists[v].size()) <= report.degeneracy)
            throw PreconditionError("vertex " + std::to_string(v) + " has " + std::to_string(lists[v].size())
                                    + " colors, degeneracy needs at least " + std::to_string(report.degeneracy + 1));
    Coloring f(static_cast<std::size_t>(g.num_vertices()));
    for (auto it = report.ordering.rbegin(); it != report.ordering.rend(); ++it) {
        const auto options = residual_list(g, lists, m, f, *it);
        f[*it] = options.front();
    }
    return f;
}

ReductionTrace reduce(const Graph& g)
{
    ReductionTrace trace;
    Graph current = g;
    std::vector<Vertex> ids(static_cast<std::size_t>(g.num_vertices()));
    std::iota(ids.begin(), ids.end(), 0);

    while (current.num_vertices() > 0) {
        std::vector<Vertex> removed;
        for (Vertex v = 0; v < current.num_vertices(); ++v) {
            if (current.degree(v) > 3)
                continue;
            LowDegreeStep step{ids[v], {}};
            for (Vertex w : current.neighbors(v))
                step.neighbors.push_back(ids[w]);
            trace.steps.emplace_back(std::move(step));
            removed.push_back(v);
            break;
        }
        if (removed.empty()) {
            auto w = find_f53(current);
            if (!w)
                break;
            GadgetStep step;
            for (std::size_t i = 0; i < 6; ++i) {
                const Vertex v = w->v[i];
                step.witness.v[i] = ids[v];
                for (Vertex x : current.neighbors(v))
                    if (std::find(w->v.begin(), w->v.end(), x) == w->v.end())
                        step.external[i].push_back(ids[x]);
                removed.push_back(v);
            }
            trace.steps.emplace_back(std::move(step));
        }
        auto sub = remove_vertices(current, removed);
        std::vector<Vertex> next_ids;
        for (Vertex v : sub.new_to_old)
            next_ids.push_back(ids[v]);
        current = std::move(sub.graph);
        ids = std::move(next_ids);
    }
    if (current.num_vertices() > 0) {
        trace.stuck = true;
        trace.remainder = std::move(current);
        trace.remainder_ids = std::move(ids);
    }
    return trace;
}

ColorList residual_list(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m,
                        const Coloring& partial, Vertex v)
{
    if (static_cast<std::size_t>(v) < partial.size() && partial[v])
        throw PreconditionError("vertex " + std::to_string(v) + " is already colored");
    ColorList out = lists[v];
    for (Vertex u : g.neighbors(v)) {
        if (static_cast<std::size_t>(u) >= partial.size() || !partial[u])
            continue;
        if (auto c = matched_color(g, m, u, *partial[u], v))
            out.erase(std::remove(out.begin(), out.end(), *c), out.end());
    }
    return out;
}

std::array<Color, 6> color_gadget(const Graph& g, const MatchingAssignment& m, const F53Witness& w,
                                  const std::array<ColorList, 6>& lstar)
{
    constexpr std::array<std::size_t, 6> kMinSize{2, 3, 2, 2, 2, 3};
    for (std::size_t i = 0; i < 6; ++i)
        if (lstar[i].size() < kMinSize[i])
            throw PreconditionError("gadget vertex v" + std::to_string(i + 1) + " has " + std::to_string(lstar[i].size())
                                    + " residual colors, needs " + std::to_string(kMinSize[i]));

    std::array<std::optional<Color>, 6> color;
    // v2 first: keep at least two options at v1.
    for (Color c : lstar[1]) {
        auto hit = matched_color(g, m, w.v[1], c, w.v[0]);
        const bool loses = hit && std::binary_search(lstar[0].begin(), lstar[0].end(), *hit);
        if (lstar[0].size() - (loses ? 1 : 0) >= 2) {
            color[1] = c;
            break;
        }
    }
    if (!color[1])
        throw PreconditionError("no color at v2 keeps two options at v1");

    for (std::size_t pos : {2u, 3u, 4u, 5u, 0u}) {
        for (Color c : lstar[pos]) {
            bool blocked = false;
            for (auto [a, b] : kF53Edges) {
                if (a != static_cast<int>(pos) && b != static_cast<int>(pos))
                    continue;
                const auto other = static_cast<std::size_t>(a == static_cast<int>(pos) ? b : a);
                if (!color[other])
                    continue;
                auto hit = matched_color(g, m, w.v[other], *color[other], w.v[pos]);
                if (hit && *hit == c) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                color[pos] = c;
                break;
            }
        }
        if (!color[pos])
            throw Error("gadget vertex v" + std::to_string(pos + 1) + " ran out of colors");
    }
    std::array<Color, 6> out{};
    for (std::size_t i = 0; i < 6; ++i)
        out[i] = *color[i];
    return out;
}

namespace {

std::string c4_message(const CycleWitness& w)
{
    std::string what = "graph contains a 4-cycle:";
    for (Vertex v : w)
        what += " " + std::to_string(v);
    return what;
}

} // namespace

C4Present::C4Present(CycleWitness witness)
    : PreconditionError(c4_message(witness)), witness_(std::move(witness))
{
}

ReductionStuck::ReductionStuck(ReductionTrace trace)
    : Error("reduction stuck with " + std::to_string(trace.remainder.num_vertices()) + " vertices left")
    , trace_(std::move(trace))
{
}

std::pair<Coloring, ReductionTrace> color_planar_c4free_traced(const Graph& g, const ListAssignment& lists,
                                                               const MatchingAssignment& m)
{
    validate_instance(g, lists, m);
    if (auto c4 = find_cycle(g, 4))
        throw C4Present(*c4);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (lists[v].size() < 4)
            throw PreconditionError("vertex " + std::to_string(v) + " has fewer than 4 colors");

    auto trace = reduce(g);
    if (trace.stuck)
        throw ReductionStuck(std::move(trace));

    Coloring f(static_cast<std::size_t>(g.num_vertices()));
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        if (const auto* low = std::get_if<LowDegreeStep>(&*it)) {
            const auto options = residual_list(g, lists, m, f, low->vertex);
            if (options.empty())
                throw Error("vertex " + std::to_string(low->vertex) + " has no residual color");
            f[low->vertex] = options.front();
            continue;
        }
        const auto& gadget = std::get<GadgetStep>(*it);
        std::array<ColorList, 6> lstar;
        for (std::size_t i = 0; i < 6; ++i)
            lstar[i] = residual_list(g, lists, m, f, gadget.witness.v[i]);
        const auto colors = color_gadget(g, m, gadget.witness, lstar);
        for (std::size_t i = 0; i < 6; ++i)
            f[gadget.witness.v[i]] = colors[i];
    }
    return {std::move(f), std::move(trace)};
}

Coloring color_planar_c4free(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m)
{
    return color_planar_c4free_traced(g, lists, m).first;
}

std::optional<Coloring> direct_list_color(const Graph& g, const ListAssignment& lists, std::uint64_t limit)
{
    if (lists.size() != static_cast<std::size_t>(g.num_vertices()))
        throw InstanceError("list assignment does not match the graph");
    return enumerate_products(lists, limit, [&](const Coloring& f) {
        for (const auto& e : g.edges())
            if (*f[e.u] == *f[e.v])
                return false;
        return true;
    });
}

std::optional<Coloring> direct_signed_color(const SignedGraph& sg, int k, std::uint64_t limit)
{
    if (sg.signs.size() != sg.graph.num_edges())
        throw InstanceError("signed graph needs one sign per edge");
    const ListAssignment lists(static_cast<std::size_t>(sg.graph.num_vertices()), nk(k));
    return enumerate_products(lists, limit, [&](const Coloring& f) {
        for (std::size_t id = 0; id < sg.graph.num_edges(); ++id) {
            const auto& e = sg.graph.edges()[id];
            if (*f[e.u] == sg.signs[id] * *f[e.v])
                return false;
        }
        return true;
    });
}

} // namespace dpc
