#include <gtest/gtest.h>

#include "dichroma/exact.hpp"
#include "test_support.hpp"

using namespace dichroma;
using namespace testsup;

namespace {

// Quadratic-residue tournament on 7 vertices: i -> i+s mod 7 for s in {1,2,4}.
Digraph paley7() {
    std::vector<Arc> arcs;
    for (int i = 0; i < 7; ++i)
        for (int s : {1, 2, 4}) arcs.emplace_back(i, (i + s) % 7);
    return mk(7, arcs);
}

}  // namespace

TEST(MaxAcyclicSet, SpecExamples) {
    EXPECT_EQ(max_acyclic_set(directed_cycle(3)).size(), 2u);
    EXPECT_EQ(max_acyclic_set(bidirected_complete(4)).size(), 1u);

    // Frozen from the subset oracle: the Paley tournament on 7 vertices has
    // maximum acyclic sets of size 3.
    Digraph p = paley7();
    EXPECT_EQ(brute_alpha(p), 3);
    VertexSet s = max_acyclic_set(p);
    EXPECT_EQ(s.size(), 3u);
    EXPECT_TRUE(is_acyclic(p, s));
}

// Branch-and-bound must equal the 2^n subset oracle exactly.
TEST(MaxAcyclicSet, MatchesSubsetOracle) {
    Rng rng(1001);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + rng.below_int(7);
        Digraph d = random_digraph(n, 0.25, rng);
        VertexSet s = max_acyclic_set(d);
        EXPECT_TRUE(is_acyclic(d, s));
        EXPECT_EQ(static_cast<int>(s.size()), brute_alpha(d));
    }
}

TEST(MaxAcyclicSet, VertexDeletionMovesAlphaByAtMostOne) {
    Rng rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + rng.below_int(6);
        Digraph d = random_digraph(n, 0.3, rng);
        int alpha = static_cast<int>(max_acyclic_set(d).size());
        int v = rng.below_int(n);
        VertexSet rest;
        for (int u = 0; u < n; ++u)
            if (u != v) rest.push_back(u);
        int alpha_minus = static_cast<int>(max_acyclic_set(induced_subgraph(d, rest)).size());
        EXPECT_LE(alpha_minus, alpha);
        EXPECT_GE(alpha_minus, alpha - 1);
    }
}

TEST(MaxAcyclicSet, BudgetCarriesBestLowerBound) {
    Digraph d = bidirected_complete(24);  // component too large for the subset fallback
    try {
        max_acyclic_set(d, 10);
        FAIL() << "expected alpha_budget_error";
    } catch (const alpha_budget_error& e) {
        EXPECT_GE(e.best(), 1);
        EXPECT_TRUE(is_acyclic(d, e.best_set()));
    }
}

TEST(MaxAcyclicSet, SubsetFallbackKicksInAtSmallSizes) {
    // Budget 1 exhausts immediately, but n <= 20 finishes by enumeration.
    Digraph d = bidirected_complete(5);
    EXPECT_EQ(max_acyclic_set(d, 1).size(), 1u);
}

TEST(DichromaticNumber, SpecExamples) {
    auto c3 = dichromatic_number(directed_cycle(3));
    EXPECT_EQ(c3.k, 2);
    EXPECT_TRUE(is_valid_coloring(directed_cycle(3), c3.coloring));

    // chi(K5) = 5 carries over to the bidirected complete digraph.
    auto k5 = dichromatic_number(bidirected_complete(5));
    EXPECT_EQ(k5.k, 5);
    EXPECT_TRUE(is_valid_coloring(bidirected_complete(5), k5.coloring));

    EXPECT_EQ(dichromatic_number(transitive_tournament(6)).k, 1);
}

TEST(DichromaticNumber, WitnessValidAndMinimal) {
    Rng rng(31337);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + rng.below_int(7);
        Digraph d = random_digraph(n, 0.3, rng);
        auto res = dichromatic_number(d);
        EXPECT_TRUE(is_valid_coloring(d, res.coloring));
        EXPECT_LE(color_count(res.coloring), res.k);

        int alpha = static_cast<int>(max_acyclic_set(d).size());
        EXPECT_GE(res.k, (n + alpha - 1) / alpha);
        EXPECT_LE(res.k, n);

        // k colors suffice and k-1 do not, checked through the list solver.
        std::vector<int> full;
        for (int c = 1; c <= res.k; ++c) full.push_back(c);
        EXPECT_EQ(is_list_colorable(d, ListAssignment::uniform(n, full)).verdict,
                  Verdict::colorable);
        if (res.k > 1) {
            full.pop_back();
            EXPECT_EQ(is_list_colorable(d, ListAssignment::uniform(n, full)).verdict,
                      Verdict::not_colorable);
        }
    }
}

// The dichromatic number equals the max over strongly connected components.
TEST(DichromaticNumber, EqualsMaxOverComponents) {
    Rng rng(60601);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + rng.below_int(7);
        Digraph d = random_digraph(n, 0.25, rng);
        int direct = dichromatic_number(d).k;
        int per_comp = d.vertex_count() == 0 ? 0 : 1;
        for (const auto& comp : strongly_connected_components(d)) {
            Digraph sub = induced_subgraph(d, comp);
            per_comp = std::max(per_comp, dichromatic_number(sub).k);
        }
        EXPECT_EQ(direct, per_comp);
    }
}

TEST(IsListColorable, SpecExamples) {
    Digraph c3 = directed_cycle(3);
    EXPECT_EQ(is_list_colorable(c3, ListAssignment::uniform(3, {1})).verdict,
              Verdict::not_colorable);

    ListAssignment mixed;
    mixed.lists = {{1}, {1}, {2}};
    auto res = is_list_colorable(c3, mixed);
    ASSERT_EQ(res.verdict, Verdict::colorable);
    ASSERT_TRUE(res.coloring.has_value());
    EXPECT_TRUE(is_valid_coloring(c3, *res.coloring));
    for (int v = 0; v < 3; ++v) {
        const auto& lv = mixed.lists[v];
        EXPECT_TRUE(std::find(lv.begin(), lv.end(), res.coloring->color[v]) != lv.end());
    }
}

TEST(IsListColorable, BudgetGivesUnknown) {
    Digraph d = bidirected_complete(6);
    auto res = is_list_colorable(d, ListAssignment::uniform(6, {1, 2, 3}), 3);
    EXPECT_EQ(res.verdict, Verdict::unknown);
    EXPECT_FALSE(res.coloring.has_value());
}

TEST(IsListColorable, RejectsMalformedLists) {
    Digraph c3 = directed_cycle(3);
    ListAssignment bad;
    bad.lists = {{1}, {}, {2}};
    EXPECT_THROW(is_list_colorable(c3, bad), std::invalid_argument);
    ListAssignment wrong_size;
    wrong_size.lists = {{1}, {2}};
    EXPECT_THROW(is_list_colorable(c3, wrong_size), std::invalid_argument);
}

TEST(ListAssignment, TextFormatRoundTrip) {
    ListAssignment l;
    l.lists = {{1, 3}, {2}, {1, 2, 7}};
    std::ostringstream os;
    write_lists(os, l);
    EXPECT_EQ(os.str(), "LISTS 3\n0 1 3\n1 2\n2 1 2 7\n");
    std::istringstream is(os.str());
    EXPECT_EQ(read_lists(is).lists, l.lists);
}

TEST(Coloring, ValidityChecker) {
    Digraph c3 = directed_cycle(3);
    Coloring good{{1, 1, 2}};
    Coloring bad{{1, 1, 1}};
    Coloring nonpositive{{0, 1, 2}};
    EXPECT_TRUE(is_valid_coloring(c3, good));
    EXPECT_FALSE(is_valid_coloring(c3, bad));
    EXPECT_FALSE(is_valid_coloring(c3, nonpositive));
    EXPECT_EQ(color_count(good), 2);
}
