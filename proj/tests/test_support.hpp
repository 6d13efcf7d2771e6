#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// here (Kahn peeling, subset scans) deliberately avoid the library's own
// search paths so the two sides stay cross-checks of each other.

#include <numeric>
#include <vector>

#include "dichroma/digraph.hpp"
#include "dichroma/rng.hpp"

namespace testsup {

using dichroma::Arc;
using dichroma::Digraph;
using dichroma::VertexSet;

inline Digraph mk(int n, const std::vector<Arc>& arcs) { return Digraph::from_arcs(n, arcs); }

inline Digraph directed_cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return mk(n, arcs);
}

// Arcs i -> j for i < j.
inline Digraph transitive_tournament(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
    return mk(n, arcs);
}

inline Digraph bidirected_complete(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) arcs.emplace_back(i, j);
    return mk(n, arcs);
}

inline Digraph bidirected_cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        arcs.emplace_back(i, (i + 1) % n);
        arcs.emplace_back((i + 1) % n, i);
    }
    return mk(n, arcs);
}

// Each ordered pair (u, v), u != v, carries an arc with probability `arc_prob`
// independently; digons can appear.
inline Digraph random_digraph(int n, double arc_prob, dichroma::Rng& rng) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.next_double() < arc_prob) arcs.emplace_back(u, v);
    return mk(n, arcs);
}

// Each unordered pair joined with probability `pair_prob`, then oriented fair.
inline Digraph random_oriented(int n, double pair_prob, dichroma::Rng& rng) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double x = rng.next_double();
            if (x < pair_prob) arcs.emplace_back(x < pair_prob / 2 ? Arc{u, v} : Arc{v, u});
        }
    return mk(n, arcs);
}

// Independent acyclicity oracle: Kahn-style peeling of in-degree-0 vertices.
inline bool kahn_is_acyclic(const Digraph& d, const VertexSet& s) {
    std::vector<int> indeg(d.vertex_count(), -1);
    for (int v : s) indeg[v] = 0;
    for (int v : s)
        for (int w : d.out(v))
            if (indeg[w] >= 0) ++indeg[w];
    std::vector<int> queue;
    for (int v : s)
        if (indeg[v] == 0) queue.push_back(v);
    std::size_t peeled = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++peeled;
        for (int w : d.out(v))
            if (indeg[w] > 0 && --indeg[w] == 0) queue.push_back(w);
    }
    return peeled == s.size();
}

inline bool kahn_is_acyclic(const Digraph& d) {
    VertexSet all(d.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return kahn_is_acyclic(d, all);
}

// Brute-force maximum acyclic set over all 2^n subsets, using the Kahn oracle.
inline int brute_alpha(const Digraph& d) {
    const int n = d.vertex_count();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        if (kahn_is_acyclic(d, s)) best = size;
    }
    return best;
}

}  // namespace testsup
