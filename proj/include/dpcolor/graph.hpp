#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpc {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted in canonical (u < v) order; an edge's index in
/// `edges()` is its id and is what per-edge data (matchings, signs) keys on.
/// Neighbor lists are sorted ascending and `incident_edges(v)[i]` is the id of
/// the edge to `neighbors(v)[i]`.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Throws InstanceError on self-loops, out-of-range endpoints or duplicates.
    static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

    int num_vertices() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
    const std::vector<std::size_t>& incident_edges(Vertex v) const { return incident_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

    bool has_edge(Vertex u, Vertex v) const;
    /// Id of edge {u,v}, if present.
    std::optional<std::size_t> edge_id(Vertex u, Vertex v) const;

    int min_degree() const;
    int max_degree() const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::vector<std::size_t>> incident_;
};

// Edge-list text format: '#' comment lines, "n m", then m lines "u v".
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// Named families: cycle, complete, path, star, grid, wheel, prism, cube,
/// octahedron, icosahedron, dodecahedral, dodecahedral-line.
/// Fixed-size families ignore `parameter`.
Graph generate(std::string_view family, int parameter);
std::vector<std::string> family_names();

/// Uniform random labeled tree (Pruefer sequence) from a seeded mt19937_64.
Graph random_tree(int n, std::uint64_t seed);

/// Line graph; vertex i of the result is edge i of `g`.
Graph line_graph(const Graph& g);

struct DegeneracyReport {
    int degeneracy = 0;
    /// Removal order of the min-degree peeling.
    std::vector<Vertex> ordering;
};

/// Min-degree peeling, ties broken by smallest id.
DegeneracyReport degeneracy(const Graph& g);

using CycleWitness = std::vector<Vertex>;

/// First simple k-cycle in the search order: smallest start vertex, then
/// lexicographic DFS through larger ids. Exhaustive.
std::optional<CycleWitness> find_cycle(const Graph& g, int k);

/// Six vertices v1..v6: cycle v1..v6 plus chord v2v6, every host degree 4,
/// no other internal edge. `v[0]` is v1.
struct F53Witness {
    std::array<Vertex, 6> v{};

    friend bool operator==(const F53Witness&, const F53Witness&) = default;
};

/// Gadget edges as index pairs into F53Witness::v (seven of them).
inline constexpr std::array<std::pair<int, int>, 7> kF53Edges{{
    {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 5}}};

bool is_f53(const Graph& g, const F53Witness& w);
std::optional<F53Witness> find_f53(const Graph& g);
/// Number of distinct F_5^3 subgraphs (each counted once, with v2 < v6).
std::size_t count_f53(const Graph& g);

struct Subgraph {
    Graph graph;
    std::vector<Vertex> new_to_old;
    /// -1 for removed vertices.
    std::vector<Vertex> old_to_new;
};

/// Induced subgraph on V(g) minus `removed`; ids are renumbered in order.
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

} // namespace dpc
