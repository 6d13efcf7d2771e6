#include <gtest/gtest.h>

#include <numeric>

#include "dichroma/generators.hpp"
#include "dichroma/heuristics.hpp"
#include "test_support.hpp"

using namespace dichroma;
using namespace testsup;

namespace {

std::vector<int> identity_order(int n) {
    std::vector<int> o(n);
    std::iota(o.begin(), o.end(), 0);
    return o;
}

// Blow-up of a directed k-cycle with equal blocks; complete forward bipartite
// arcs between consecutive blocks.
Digraph cycle_blowup_local(int k, int block) {
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i)
        for (int a = 0; a < block; ++a)
            for (int b = 0; b < block; ++b)
                arcs.emplace_back(i * block + a, ((i + 1) % k) * block + b);
    return mk(k * block, arcs);
}

}  // namespace

TEST(GreedyAcyclic, SpecExamples) {
    Digraph tt3 = transitive_tournament(3);
    // Sinks first: every revealed out-neighborhood is already accepted.
    auto sinks_first = greedy_acyclic(tt3, {2, 1, 0});
    EXPECT_EQ(sinks_first.accepted.size(), 3u);
    // Sources first: the first vertex discards everything.
    auto sources_first = greedy_acyclic(tt3, {0, 1, 2});
    EXPECT_EQ(sources_first.accepted, std::vector<int>({0}));
    EXPECT_EQ(sources_first.unused, std::vector<int>({1, 2}));

    for (const auto& order : {std::vector<int>{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}})
        EXPECT_EQ(greedy_acyclic(directed_cycle(3), order).accepted.size(), 2u);
}

TEST(GreedyAcyclic, TraceInvariantsOnRandomInstances) {
    Rng rng(90);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + rng.below_int(12);
        Digraph d = random_digraph(n, 0.3, rng);
        auto order = rng.permutation(n);
        auto trace = greedy_acyclic(d, order);

        VertexSet acc = make_vertex_set(trace.accepted);
        EXPECT_TRUE(is_acyclic(d, acc));
        EXPECT_EQ(acc.size() + trace.unused.size(), static_cast<std::size_t>(n));

        // Arc-orientation invariant: arcs inside A point to earlier-accepted.
        std::vector<int> when(n, -1);
        for (std::size_t i = 0; i < trace.accepted.size(); ++i) when[trace.accepted[i]] = static_cast<int>(i);
        for (int u : trace.accepted)
            for (int v : d.out(u)) {
                if (when[v] >= 0) {
                    EXPECT_LT(when[v], when[u]);
                }
            }

        // Costs: each step removes the vertex itself plus its discards.
        long long total = 0;
        for (int c : trace.step_cost) {
            EXPECT_GE(c, 1);
            total += c;
        }
        EXPECT_EQ(total, n);
    }
}

// On r-regular inputs each acceptance removes the vertex plus at most its r
// out-neighbors.
TEST(GreedyAcyclic, StepCostBoundedOnRegularInputs) {
    for (int r : {1, 3, 6}) {
        for (int rep = 0; rep < 10; ++rep) {
            auto cp = dichroma::sample_directed_configuration(40, r, dichroma::substream(17, rep * 8 + r));
            dichroma::MultiDigraph m = cp.to_multidigraph();
            Rng rng(dichroma::substream(18, rep * 8 + r));
            auto trace = greedy_acyclic(m, rng.permutation(40));
            for (int c : trace.step_cost) {
                EXPECT_GE(c, 1);
                EXPECT_LE(c, r + 1);
            }
        }
    }
}

TEST(GreedyAcyclic, MultiDigraphIgnoresLoops) {
    MultiDigraph m = MultiDigraph::from_arcs(3, {{0, 0}, {0, 1}, {0, 1}, {1, 2}});
    auto trace = greedy_acyclic(m, identity_order(3));
    EXPECT_EQ(trace.accepted, std::vector<int>({0, 2}));
    EXPECT_EQ(trace.unused, std::vector<int>({1}));
}

TEST(GreedyTruncated, SpecExamples) {
    auto tt10 = greedy_truncated(transitive_tournament(10), {9, 8, 7, 6, 5, 4, 3, 2, 1, 0}, 0.2);
    EXPECT_EQ(tt10.accepted.size(), 3u);  // stops after exceeding floor(0.2*10) = 2

    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + rng.below_int(10);
        Digraph d = random_digraph(n, 0.3, rng);
        auto order = rng.permutation(n);
        auto full = greedy_acyclic(d, order);
        auto capped = greedy_truncated(d, order, 0.999);
        if (full.accepted.size() < 0.999 * n) {
            EXPECT_EQ(capped.accepted, full.accepted);
        }
    }

    auto c3 = greedy_truncated(directed_cycle(3), {0, 1, 2}, 1.0 / 3.0);
    EXPECT_EQ(c3.accepted.size(), 2u);  // adds a second vertex, then halts

    EXPECT_THROW(greedy_truncated(directed_cycle(3), {0, 1, 2}, 0.0), std::invalid_argument);
    EXPECT_THROW(greedy_truncated(directed_cycle(3), {0, 1, 2}, 1.0), std::invalid_argument);
}

TEST(C3FreeAcyclic, SpecExamples) {
    Digraph single(1);
    EXPECT_EQ(c3free_acyclic(single, 0.5), VertexSet({0}));

    // A transitive tournament has no directed cycle at all; any extracted
    // set is acyclic.
    Digraph tt8 = transitive_tournament(8);
    VertexSet out = c3free_acyclic(tt8, 0.5);
    EXPECT_FALSE(out.empty());
    EXPECT_TRUE(is_acyclic(tt8, out));
}

TEST(C3FreeAcyclic, CycleBlowupStaysBelowExactAlpha) {
    Digraph d = cycle_blowup_local(4, 5);  // n = 20, C3-free, alpha = 15
    VertexSet out = c3free_acyclic(d, 0.9);
    EXPECT_TRUE(is_acyclic(d, out));
    EXPECT_LE(out.size(), 15u);
    EXPECT_EQ(max_acyclic_set(d).size(), 15u);
}

TEST(C3FreeAcyclic, NamesATriangle) {
    try {
        c3free_acyclic(directed_cycle(3), 0.5);
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("triangle"), std::string::npos);
    }
    EXPECT_THROW(c3free_acyclic(Digraph(2), 2.0), std::invalid_argument);  // delta range
}

TEST(C3FreeAcyclic, DigonsAreAccepted) {
    // Digons are not directed triangles; the extractor must handle them.
    Digraph digons = bidirected_cycle(4);
    VertexSet out = c3free_acyclic(digons, 0.5);
    EXPECT_FALSE(out.empty());
    EXPECT_TRUE(is_acyclic(digons, out));
}

TEST(TT3FreeAcyclic, SpecExamples) {
    Digraph c3 = directed_cycle(3);
    VertexSet out = tt3free_acyclic(c3, {0, 1, 2});
    EXPECT_EQ(out, VertexSet({0, 2}));  // forward graph is the path 0-1-2
    EXPECT_TRUE(is_acyclic(c3, out));

    for (int n : {5, 8, 11}) {
        Digraph cn = directed_cycle(n);
        VertexSet ind = tt3free_acyclic(cn, identity_order(n));
        EXPECT_GE(static_cast<int>(ind.size()), n / 2);
        EXPECT_TRUE(is_acyclic(cn, ind));
    }
}

TEST(TT3FreeAcyclic, BlowupMeetsSqrtFloor) {
    Digraph d = cycle_blowup_local(3, 4);  // n = 12, TT3-free, alpha = 8
    Rng rng(303);
    for (int trial = 0; trial < 20; ++trial) {
        VertexSet out = tt3free_acyclic(d, rng.permutation(12));
        EXPECT_TRUE(is_acyclic(d, out));
        EXPECT_GE(out.size(), 3u);  // floor(sqrt(12))
        EXPECT_LE(out.size(), 8u);
    }
    EXPECT_EQ(max_acyclic_set(d).size(), 8u);
}

TEST(TT3FreeAcyclic, NamesATransitiveTriangle) {
    try {
        tt3free_acyclic(transitive_tournament(3), {0, 1, 2});
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("transitive triangle"), std::string::npos);
    }
    // skip_check trusts the caller.
    VertexSet out = tt3free_acyclic(transitive_tournament(3), {0, 1, 2}, true);
    EXPECT_FALSE(out.empty());
}

TEST(ForwardGraph, TriangleFreeWheneverInputIsTT3Free) {
    Rng rng(404);
    int built = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + rng.below_int(8);
        Digraph d = random_oriented(n, 0.4, rng);
        bool tt3 = false;
        for (int b = 0; b < n && !tt3; ++b)
            for (int a : d.in(b))
                for (int c : d.out(b))
                    if (a != c && d.has_arc(a, c)) tt3 = true;
        if (tt3) continue;
        auto order = rng.permutation(n);
        auto adj = forward_graph(d, order);
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                for (int w : adj[v]) {
                    if (w != u) {
                        EXPECT_FALSE(std::binary_search(adj[w].begin(), adj[w].end(), u))
                            << "triangle " << u << "," << v << "," << w;
                    }
                }
        ++built;
    }
    EXPECT_GT(built, 20);
}
