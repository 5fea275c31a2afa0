#pragma once

#include "dpcolor/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dpc {

using Color = int;

/// Sorted, duplicate-free list of colors.
using ColorList = std::vector<Color>;

/// One list per host vertex.
using ListAssignment = std::vector<ColorList>;

/// (color at u, color at v) for an edge stored as u < v.
using ColorPair = std::pair<Color, Color>;

/// Per-edge partial matchings, indexed by the host graph's edge ids.
struct MatchingAssignment {
    std::vector<std::vector<ColorPair>> pairs;

    friend bool operator==(const MatchingAssignment&, const MatchingAssignment&) = default;
};

/// Chosen color per vertex; nullopt marks an uncolored vertex.
using Coloring = std::vector<std::optional<Color>>;

struct SignedGraph {
    Graph graph;
    /// +1 or -1 per edge id.
    std::vector<int> signs;
};

/// Throws InstanceError unless every list is nonempty, sorted and unique, and
/// every edge carries a partial matching between the two endpoint lists.
void validate_instance(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m);

/// Color at `to` matched with (from, c) on edge {from, to}, if any.
std::optional<Color> matched_color(const Graph& g, const MatchingAssignment& m, Vertex from, Color c, Vertex to);

/// {0, +-1, ..., +-r} for odd k = 2r+1, {+-1, ..., +-r} for even k = 2r.
/// Returned ascending.
std::vector<Color> nk(int k);

ListAssignment full_lists(const Graph& g, int t);

/// (c, c) for every c in L(u) and L(v): the matchings under which
/// DP-coloring is exactly list coloring.
MatchingAssignment identity_matchings(const Graph& g, const ListAssignment& lists);

/// Lists N_k; positive edges carry (i, i), negative edges (i, -i).
std::pair<ListAssignment, MatchingAssignment> signed_instance(const SignedGraph& sg, int k);

/// For each edge in id order, a uniformly random maximum matching between the
/// two lists. The larger list is Fisher-Yates shuffled with a mt19937_64
/// seeded by `seed` and its first min(|L(u)|, |L(v)|) entries are paired with
/// the smaller list in ascending order. Output depends only on the inputs.
MatchingAssignment random_matchings(const Graph& g, const ListAssignment& lists, std::uint64_t seed);

/// Per-vertex color relabeling; each map must be a bijection from L(u).
using Twist = std::vector<std::map<Color, Color>>;

std::pair<ListAssignment, MatchingAssignment> twist(const Graph& g, const ListAssignment& lists,
                                                    const MatchingAssignment& m, const Twist& pi);

/// Materialized cover graph; fibers are contiguous in `vertices`.
struct CoverGraph {
    std::vector<std::pair<Vertex, Color>> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t fiber_edges = 0;
    std::size_t cross_edges = 0;

    std::optional<std::size_t> index_of(Vertex u, Color c) const;
    bool adjacent(std::size_t a, std::size_t b) const;
};

CoverGraph build_cover(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m);

/// True when the cover vertices {(u, f(u))} are pairwise non-adjacent and
/// cover every fiber, i.e. an independent set of size |V(G)|.
bool is_independent_transversal(const CoverGraph& cover, const Graph& g, const Coloring& f);

struct Violation {
    enum class Kind { Uncolored, NotInList, MatchedEdge };
    Kind kind;
    Vertex u = 0;
    Vertex v = 0; // MatchedEdge only
    Color cu = 0;
    Color cv = 0;

    std::string describe() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every reason `f` is not a DP-coloring; empty iff it is one.
std::vector<Violation> verify_coloring(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m,
                                       const Coloring& f);

} // namespace dpc
