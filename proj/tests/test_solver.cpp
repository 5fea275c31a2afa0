#include "dpcolor/errors.hpp"
#include "dpcolor/solver.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace dpc;

namespace {

// C_4 with identity matchings except the crossed pair on edge 2-3.
MatchingAssignment crossed_c4(const Graph& c4)
{
    auto m = identity_matchings(c4, full_lists(c4, 2));
    m.pairs[*c4.edge_id(2, 3)] = {{1, 2}, {2, 1}};
    return m;
}

// Every assignment of perfect matchings on lists {1..t}, with no forest
// normalization at all; true if all of them are solvable.
bool all_perfect_assignments_solvable(const Graph& g, int t)
{
    std::vector<std::vector<Color>> perms;
    std::vector<Color> perm(static_cast<std::size_t>(t));
    std::iota(perm.begin(), perm.end(), 1);
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    const auto lists = full_lists(g, t);
    std::vector<std::size_t> idx(g.num_edges(), 0);
    while (true) {
        MatchingAssignment m;
        m.pairs.resize(g.num_edges());
        for (std::size_t id = 0; id < g.num_edges(); ++id)
            for (int a = 1; a <= t; ++a)
                m.pairs[id].emplace_back(a, perms[idx[id]][a - 1]);
        if (!testing::naive_dp_colorable(g, lists, m))
            return false;
        std::size_t pos = idx.size();
        while (pos > 0 && ++idx[pos - 1] == perms.size())
            idx[--pos] = 0;
        if (pos == 0)
            return true;
    }
}

} // namespace

TEST_CASE("solve_transversal examples")
{
    const auto c4 = generate("cycle", 4);
    const auto l2 = full_lists(c4, 2);
    const auto id2 = identity_matchings(c4, l2);
    const auto f = solve_transversal(c4, l2, id2);
    REQUIRE(f);
    CHECK(verify_coloring(c4, l2, id2, *f).empty());

    CHECK_FALSE(solve_transversal(c4, l2, crossed_c4(c4)));

    const auto k4 = generate("complete", 4);
    const auto l4 = full_lists(k4, 4);
    const auto g = solve_transversal(k4, l4, identity_matchings(k4, l4));
    REQUIRE(g);
    std::set<Color> used;
    for (const auto& c : *g)
        used.insert(*c);
    CHECK(used.size() == 4);

    CHECK(solve_transversal(Graph(0), {}, {}) == Coloring{});
    CHECK_THROWS_AS(solve_transversal(c4, full_lists(generate("cycle", 3), 2), id2), InstanceError);
}

TEST_CASE("brute_force_transversal examples")
{
    const auto c4 = generate("cycle", 4);
    const auto l2 = full_lists(c4, 2);
    const auto id2 = identity_matchings(c4, l2);
    CHECK(brute_force_transversal(c4, l2, id2) == Coloring{1, 2, 1, 2});
    CHECK_FALSE(brute_force_transversal(c4, l2, crossed_c4(c4)));

    CHECK(brute_force_transversal(Graph(1), {{5}}, {}) == Coloring{5});

    const auto k3 = generate("complete", 3);
    const auto l1 = full_lists(k3, 1);
    CHECK_FALSE(brute_force_transversal(k3, l1, identity_matchings(k3, l1)));

    const auto big = generate("path", 20);
    const auto l4 = full_lists(big, 4);
    CHECK_THROWS_AS(brute_force_transversal(big, l4, identity_matchings(big, l4)), GuardExceeded);
    CHECK_NOTHROW(brute_force_transversal(c4, l2, id2, 16));
    CHECK_THROWS_AS(brute_force_transversal(c4, l2, id2, 15), GuardExceeded);
}

TEST_CASE("solve_transversal and brute force agree")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 7;
        const auto g = testing::random_graph(n, 0.55, rng);
        const auto lists = testing::random_lists(n, 1, 3, 3, rng);
        const auto m = testing::random_partial_matchings(g, lists, rng, 0.9);
        const auto fast = solve_transversal(g, lists, m);
        const auto slow = brute_force_transversal(g, lists, m);
        CHECK(fast.has_value() == slow.has_value());
        CHECK(fast.has_value() == testing::naive_dp_colorable(g, lists, m));
        if (fast)
            CHECK(verify_coloring(g, lists, m, *fast).empty());
        if (slow)
            CHECK(verify_coloring(g, lists, m, *slow).empty());
    }
}

TEST_CASE("dp_chromatic on small graphs")
{
    const auto c4 = dp_chromatic(generate("cycle", 4), 4);
    CHECK(c4.value == 3);
    CHECK_FALSE(c4.exceeds_max_t);
    REQUIRE(c4.failing);
    CHECK(c4.failing_t == 2);
    CHECK(c4.free_edges.size() == 1);
    CHECK(c4.assignments_searched == 6);
    CHECK_FALSE(brute_force_transversal(generate("cycle", 4), full_lists(generate("cycle", 4), 2), *c4.failing));

    const auto k4 = dp_chromatic(generate("complete", 4), 4);
    CHECK(k4.value == 4);
    CHECK(k4.failing_t == 3);
    CHECK(k4.assignments_searched == 13824);

    // C_5 at t = 2: the very first (all-identity) assignment fails.
    const auto c5g = generate("cycle", 5);
    const auto c5 = dp_chromatic(c5g, 4);
    CHECK(c5.value == 3);
    CHECK(c5.failing_t == 2);
    CHECK(*c5.failing == identity_matchings(c5g, full_lists(c5g, 2)));
    CHECK(c5.assignments_searched == 6);

    CHECK(dp_chromatic(generate("path", 3), 4).value == 2);
    CHECK(dp_chromatic(Graph(3), 4).value == 1);
    CHECK(dp_chromatic(generate("cycle", 6), 4).value == 3);
}

TEST_CASE("dp_chromatic bounds and guards")
{
    const auto k4 = dp_chromatic(generate("complete", 4), 3);
    CHECK(k4.exceeds_max_t);
    CHECK(k4.value == 4);
    CHECK(k4.failing_t == 3);

    CHECK_THROWS_AS(dp_chromatic(generate("complete", 5), 4), GuardExceeded);
    ChromaticOptions tight;
    tight.max_assignments = 100;
    CHECK_THROWS_AS(dp_chromatic(generate("complete", 4), 4, tight), GuardExceeded);
    CHECK_THROWS_AS(dp_chromatic(generate("cycle", 4), 0), PreconditionError);
}

TEST_CASE("normalized enumeration agrees with all perfect-matching assignments")
{
    for (const auto& g : {generate("cycle", 4), generate("path", 3)}) {
        for (int t = 1; t <= 3; ++t) {
            const bool normalized_all_pass = dp_chromatic(g, t).value <= t;
            CHECK(normalized_all_pass == all_perfect_assignments_solvable(g, t));
        }
    }
}

TEST_CASE("spanning_forest_split")
{
    const auto [forest, free] = spanning_forest_split(generate("complete", 4));
    CHECK(forest.size() == 3);
    CHECK(free.size() == 3);
    const auto [f2, r2] = spanning_forest_split(Graph::from_edges(
        5, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}, {3, 4}, {2, 4}}));
    CHECK(f2.size() == 3);
    CHECK(r2.size() == 1);
}

TEST_CASE("greedy_degenerate_color")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto tree = random_tree(30, seed);
        const auto lists = full_lists(tree, 2);
        const auto m = random_matchings(tree, lists, seed);
        CHECK(verify_coloring(tree, lists, m, greedy_degenerate_color(tree, lists, m)).empty());
    }
    const auto c6 = generate("cycle", 6);
    const auto l3 = full_lists(c6, 3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto m = random_matchings(c6, l3, seed);
        CHECK(verify_coloring(c6, l3, m, greedy_degenerate_color(c6, l3, m)).empty());
    }
    const auto dl = generate("dodecahedral-line", 0);
    const auto l5 = full_lists(dl, 5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto m = random_matchings(dl, l5, seed);
        CHECK(verify_coloring(dl, l5, m, greedy_degenerate_color(dl, l5, m)).empty());
    }
    const auto l2 = full_lists(c6, 2);
    CHECK_THROWS_AS(greedy_degenerate_color(c6, l2, identity_matchings(c6, l2)), PreconditionError);
}

TEST_CASE("reduce examples")
{
    const auto c6 = reduce(generate("cycle", 6));
    CHECK_FALSE(c6.stuck);
    REQUIRE(c6.steps.size() == 6);
    for (const auto& step : c6.steps)
        CHECK(std::holds_alternative<LowDegreeStep>(step));

    const auto dl = reduce(generate("dodecahedral-line", 0));
    CHECK_FALSE(dl.stuck);
    REQUIRE_FALSE(dl.steps.empty());
    CHECK(std::holds_alternative<GadgetStep>(dl.steps.front()));

    const auto k5 = reduce(generate("complete", 5));
    CHECK(k5.stuck);
    CHECK(k5.steps.empty());
    CHECK(k5.remainder.num_vertices() == 5);
    CHECK(k5.remainder.num_edges() == 10);
    CHECK(k5.remainder_ids == std::vector<Vertex>{0, 1, 2, 3, 4});

    const auto pg = reduce(testing::projective_plane_incidence());
    CHECK(pg.stuck);
    CHECK(pg.remainder.num_vertices() == 26);
}

TEST_CASE("reduction traces replay to the empty graph")
{
    std::vector<Graph> corpus{generate("dodecahedral-line", 0), generate("dodecahedral", 0), generate("cycle", 5),
                              generate("icosahedron", 0), random_tree(40, 1)};
    for (const auto& g : corpus) {
        const auto trace = reduce(g);
        std::vector<bool> alive(static_cast<std::size_t>(g.num_vertices()), true);
        auto alive_degree = [&](Vertex v) {
            int d = 0;
            for (Vertex w : g.neighbors(v))
                d += alive[w] ? 1 : 0;
            return d;
        };
        auto alive_neighbors = [&](Vertex v, const std::array<Vertex, 6>* skip) {
            std::vector<Vertex> out;
            for (Vertex w : g.neighbors(v))
                if (alive[w] && (!skip || std::find(skip->begin(), skip->end(), w) == skip->end()))
                    out.push_back(w);
            return out;
        };
        for (const auto& step : trace.steps) {
            if (const auto* low = std::get_if<LowDegreeStep>(&step)) {
                REQUIRE(alive[low->vertex]);
                CHECK(alive_degree(low->vertex) <= 3);
                CHECK(alive_neighbors(low->vertex, nullptr) == low->neighbors);
                alive[low->vertex] = false;
                continue;
            }
            const auto& gadget = std::get<GadgetStep>(step);
            constexpr std::array<std::size_t, 6> kExternal{2, 1, 2, 2, 2, 1};
            for (std::size_t i = 0; i < 6; ++i) {
                const Vertex v = gadget.witness.v[i];
                REQUIRE(alive[v]);
                CHECK(alive_degree(v) == 4);
                CHECK(gadget.external[i].size() == kExternal[i]);
                CHECK(alive_neighbors(v, &gadget.witness.v) == gadget.external[i]);
            }
            for (Vertex v : gadget.witness.v)
                alive[v] = false;
        }
        int remaining = 0;
        for (bool a : alive)
            remaining += a ? 1 : 0;
        CHECK(remaining == (trace.stuck ? trace.remainder.num_vertices() : 0));
    }
}

TEST_CASE("residual_list")
{
    // Star: center 0, leaves 1..3.
    const auto star = generate("star", 4);
    const ListAssignment lists{{1, 2, 3, 4}, {1, 2}, {5, 6}, {7}};
    MatchingAssignment m;
    m.pairs = {{{2, 1}}, {{4, 6}}, {}};
    Coloring partial{std::nullopt, 1, 6, 7};
    CHECK(residual_list(star, lists, m, partial, 0) == ColorList{1, 3});

    // Colored neighbor whose color is unmatched on the edge removes nothing.
    Coloring unmatched{std::nullopt, 2, 5, 7};
    CHECK(residual_list(star, lists, m, unmatched, 0) == ColorList{1, 2, 3, 4});

    CHECK_THROWS_AS(residual_list(star, lists, m, partial, 1), PreconditionError);

    // Gadget vertex v2 with one colored external neighbor keeps >= 3 colors.
    const auto dl = generate("dodecahedral-line", 0);
    const auto w = *find_f53(dl);
    const auto l4 = full_lists(dl, 4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto rm = random_matchings(dl, l4, seed);
        Coloring f(30);
        for (Vertex v = 0; v < 30; ++v)
            if (std::find(w.v.begin(), w.v.end(), v) == w.v.end())
                f[v] = 1 + static_cast<int>(seed % 4);
        CHECK(residual_list(dl, l4, rm, f, w.v[1]).size() >= 3);
        CHECK(residual_list(dl, l4, rm, f, w.v[5]).size() >= 3);
        CHECK(residual_list(dl, l4, rm, f, w.v[0]).size() >= 2);
    }
}

TEST_CASE("color_gadget examples")
{
    const auto g = testing::gadget_graph();
    const F53Witness w{{0, 1, 2, 3, 4, 5}};
    MatchingAssignment empty;
    empty.pairs.resize(g.num_edges());
    const std::array<ColorList, 6> lstar{ColorList{4, 5}, {1, 2, 3}, {2, 3}, {1, 2}, {1, 2}, {1, 2, 3}};
    CHECK(color_gadget(g, empty, w, lstar) == std::array<Color, 6>{4, 1, 2, 1, 1, 1});

    // v2's colors 1 and 2 would each cost v1 one of its two colors.
    auto m = empty;
    m.pairs[*g.edge_id(0, 1)] = {{1, 1}, {2, 2}};
    const std::array<ColorList, 6> tight{ColorList{1, 2}, {1, 2, 3}, {1, 2}, {1, 2}, {1, 2}, {1, 2, 3}};
    const auto colors = color_gadget(g, m, w, tight);
    CHECK(colors[1] == 3);

    std::array<ColorList, 6> too_small = tight;
    too_small[1] = {1, 2};
    CHECK_THROWS_AS(color_gadget(g, m, w, too_small), PreconditionError);
}

TEST_CASE("color_gadget on random full matchings")
{
    const auto g = testing::gadget_graph();
    const F53Witness w{{0, 1, 2, 3, 4, 5}};
    std::mt19937_64 rng(71);
    constexpr std::array<int, 6> kSizes{2, 3, 2, 2, 2, 3};
    for (int trial = 0; trial < 300; ++trial) {
        ListAssignment lstar(6);
        for (std::size_t i = 0; i < 6; ++i)
            lstar[i] = testing::random_lists(1, kSizes[i], kSizes[i], 4, rng)[0];
        const auto m = random_matchings(g, lstar, rng());
        std::array<ColorList, 6> arr;
        std::copy(lstar.begin(), lstar.end(), arr.begin());
        const auto colors = color_gadget(g, m, w, arr);
        Coloring f(colors.begin(), colors.end());
        CHECK(verify_coloring(g, lstar, m, f).empty());
    }
}

TEST_CASE("color_planar_c4free")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto tree = random_tree(25, seed);
        const auto lists = full_lists(tree, 4);
        const auto m = random_matchings(tree, lists, seed);
        CHECK(verify_coloring(tree, lists, m, color_planar_c4free(tree, lists, m)).empty());
    }

    const auto dl = generate("dodecahedral-line", 0);
    // Lists larger than 4 and drawn from a wider palette also work.
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        const auto lists = testing::random_lists(30, 4, 6, 8, rng);
        const auto m = random_matchings(dl, lists, rng());
        CHECK(verify_coloring(dl, lists, m, color_planar_c4free(dl, lists, m)).empty());
    }

    const auto c4 = generate("cycle", 4);
    const auto l4 = full_lists(c4, 4);
    try {
        color_planar_c4free(c4, l4, identity_matchings(c4, l4));
        FAIL("expected C4Present");
    } catch (const C4Present& e) {
        CHECK(e.witness() == CycleWitness{0, 1, 2, 3});
    }

    const auto c5 = generate("cycle", 5);
    const auto l3 = full_lists(c5, 3);
    CHECK_THROWS_AS(color_planar_c4free(c5, l3, identity_matchings(c5, l3)), PreconditionError);

    const auto pg = testing::projective_plane_incidence();
    const auto lp = full_lists(pg, 4);
    CHECK_THROWS_AS(color_planar_c4free(pg, lp, identity_matchings(pg, lp)), ReductionStuck);
}

TEST_CASE("direct_list_color")
{
    const auto k4 = generate("complete", 4);
    CHECK_FALSE(direct_list_color(k4, full_lists(k4, 3)));
    const auto c4 = generate("cycle", 4);
    CHECK(direct_list_color(c4, full_lists(c4, 2)) == Coloring{1, 2, 1, 2});
    CHECK_THROWS_AS(direct_list_color(generate("path", 20), full_lists(generate("path", 20), 4)), GuardExceeded);
}

TEST_CASE("direct_signed_color")
{
    const auto e = Graph::from_edges(2, std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
    const auto pos = direct_signed_color({e, {1}}, 2);
    REQUIRE(pos);
    CHECK(*(*pos)[0] != *(*pos)[1]);
    const auto neg = direct_signed_color({e, {-1}}, 2);
    REQUIRE(neg);
    CHECK(*(*neg)[0] != -*(*neg)[1]);
    CHECK(*neg == Coloring{-1, -1});

    // A negative edge with k = 1: only color 0, and 0 = -0.
    CHECK_FALSE(direct_signed_color({e, {-1}}, 1));
}

TEST_CASE("monotonicity: old witnesses survive added colors and deleted pairs")
{
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 5;
        const auto g = testing::random_graph(n, 0.5, rng);
        auto lists = testing::random_lists(n, 2, 3, 4, rng);
        auto m = testing::random_partial_matchings(g, lists, rng);
        const auto f = solve_transversal(g, lists, m);
        if (!f)
            continue;
        const Vertex v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
        lists[v].push_back(100);
        if (g.num_edges() > 0) {
            auto& pairs = m.pairs[rng() % g.num_edges()];
            if (!pairs.empty())
                pairs.erase(pairs.begin() + static_cast<long>(rng() % pairs.size()));
        }
        CHECK(verify_coloring(g, lists, m, *f).empty());
        CHECK(solve_transversal(g, lists, m));
    }
}
