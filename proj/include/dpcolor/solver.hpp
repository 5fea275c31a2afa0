#pragma once

#include "dpcolor/cover.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace dpc {

/// Backtracking search: most-constrained vertex first (ties by id), colors
/// ascending, forward checking on neighbor domains. Complete.
std::optional<Coloring> solve_transversal(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m);

inline constexpr std::uint64_t kDefaultBruteForceLimit = 10'000'000;

/// Product enumeration in lexicographic order; returns the first valid
/// transversal. Throws GuardExceeded when prod |L(u)| > limit.
std::optional<Coloring> brute_force_transversal(const Graph& g, const ListAssignment& lists,
                                                const MatchingAssignment& m,
                                                std::uint64_t limit = kDefaultBruteForceLimit);

struct ChromaticOptions {
    int max_free_edges = 4;
    std::uint64_t max_assignments = 10'000'000;
};

/// Result of the exact DP-chromatic search.
///
/// Only normalized instances are enumerated: lists {1..t}, perfect matchings,
/// identity on a BFS spanning forest. `failing` is the first unsolvable
/// assignment met at `value - 1` (or at `max_t` when `exceeds_max_t`).
struct ChromaticCertificate {
    int value = 0;
    bool exceeds_max_t = false;
    int max_t = 0;
    std::vector<Edge> forest;
    std::vector<Edge> free_edges;
    std::optional<int> failing_t;
    std::optional<MatchingAssignment> failing;
    /// Normalized assignments searched at `value`; all of them when !exceeds_max_t.
    std::uint64_t assignments_searched = 0;
};

ChromaticCertificate dp_chromatic(const Graph& g, int t_max, const ChromaticOptions& options = {});

/// Edges of the spanning forest used by the normalization, and the rest.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> spanning_forest_split(const Graph& g);

/// Colors in reverse degeneracy order, smallest free color each time.
/// Throws PreconditionError unless every list has more than degeneracy(g) colors.
Coloring greedy_degenerate_color(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m);

struct LowDegreeStep {
    Vertex vertex = 0;
    std::vector<Vertex> neighbors;
};

struct GadgetStep {
    F53Witness witness;
    /// Neighbors outside the gadget, per witness position.
    std::array<std::vector<Vertex>, 6> external;
};

using ReductionStep = std::variant<LowDegreeStep, GadgetStep>;

/// Steps use original vertex ids. When the loop gets stuck, `remainder` holds
/// the surviving subgraph and `remainder_ids` its original ids.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    bool stuck = false;
    Graph remainder;
    std::vector<Vertex> remainder_ids;
};

/// Repeatedly removes the smallest-id vertex of degree <= 3, else the first
/// F_5^3 gadget, else stops.
ReductionTrace reduce(const Graph& g);

/// L(v) minus the colors matched to colored neighbors' choices.
ColorList residual_list(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m,
                        const Coloring& partial, Vertex v);

/// Colors the gadget from residual lists (indexed like the witness):
/// v2 takes the smallest color leaving two options at v1, then v3, v4, v5, v6,
/// v1 greedily. Throws PreconditionError unless |lstar| >= (2,3,2,2,2,3).
std::array<Color, 6> color_gadget(const Graph& g, const MatchingAssignment& m, const F53Witness& w,
                                  const std::array<ColorList, 6>& lstar);

class C4Present : public PreconditionError {
public:
    explicit C4Present(CycleWitness witness);
    const CycleWitness& witness() const noexcept { return witness_; }

private:
    CycleWitness witness_;
};

class ReductionStuck : public Error {
public:
    explicit ReductionStuck(ReductionTrace trace);
    const ReductionTrace& trace() const noexcept { return trace_; }

private:
    ReductionTrace trace_;
};

/// DP-4-coloring of a C_4-free graph (planarity is the caller's claim):
/// reduce, then replay the trace backwards from residual lists.
Coloring color_planar_c4free(const Graph& g, const ListAssignment& lists, const MatchingAssignment& m);

/// Same, also returning the trace that was replayed.
std::pair<Coloring, ReductionTrace> color_planar_c4free_traced(const Graph& g, const ListAssignment& lists,
                                                               const MatchingAssignment& m);

/// Plain list coloring by exhaustive enumeration (first in lexicographic order).
std::optional<Coloring> direct_list_color(const Graph& g, const ListAssignment& lists,
                                          std::uint64_t limit = kDefaultBruteForceLimit);

/// Signed k-coloring over N_k by exhaustive enumeration: f(u) != sign(uv) f(v).
std::optional<Coloring> direct_signed_color(const SignedGraph& sg, int k,
                                            std::uint64_t limit = kDefaultBruteForceLimit);

} // namespace dpc
