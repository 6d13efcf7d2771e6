#pragma once

#include <cmath>
#include <vector>

#include "dichroma/degeneracy.hpp"

// Scalable acyclic-set extraction: the reveal-and-discard greedy (plain and
// truncated), the recursive extractor for digraphs with no directed triangle,
// and the forward-graph method for digraphs with no transitive triangle.

namespace dichroma {

// One run of the greedy: process vertices along a total order; the first
// still-waiting vertex is accepted and its out-neighborhood among the waiting
// vertices is discarded. Accepted vertices induce an acyclic set (ignoring
// loops): every arc inside points from a later-accepted to an earlier-
// accepted vertex.
struct GreedyTrace {
    std::vector<int> order;     // the total order used (rank -> vertex)
    std::vector<int> accepted;  // A, in insertion order
    std::vector<int> unused;    // final U, sorted
    std::vector<int> step_cost; // reduction of |W| at each acceptance
};

namespace detail {

template <typename OutFn>
GreedyTrace greedy_core(int n, const std::vector<int>& order, OutFn&& out_of, double cap_fraction) {
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order must be a permutation of the vertices");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("order must be a permutation of the vertices");
        pos[v] = i;
    }
    // Exact-rational cap semantics: continue while |A| <= floor(cap * n); the
    // epsilon absorbs binary rounding of caps like 1/3 at integer boundaries.
    long long cap = cap_fraction >= 1.0 ? n
                                        : static_cast<long long>(cap_fraction * n + 1e-9);

    GreedyTrace trace;
    trace.order = order;
    std::vector<signed char> status(n, 0);  // 0 = waiting, 1 = accepted, 2 = unused
    for (int rank = 0; rank < n; ++rank) {
        if (static_cast<long long>(trace.accepted.size()) > cap) break;
        int w = order[rank];
        if (status[w] != 0) continue;
        status[w] = 1;
        trace.accepted.push_back(w);
        int discarded = 0;
        for (int x : out_of(w))
            if (x != w && status[x] == 0) {
                status[x] = 2;
                ++discarded;
            }
        trace.step_cost.push_back(1 + discarded);
    }
    for (int v = 0; v < n; ++v)
        if (status[v] == 2) trace.unused.push_back(v);
    return trace;
}

}  // namespace detail

inline GreedyTrace greedy_acyclic(const Digraph& d, const std::vector<int>& order) {
    return detail::greedy_core(d.vertex_count(), order,
                               [&](int v) -> const std::vector<int>& { return d.out(v); }, 1.0);
}

// Multidigraph variant; loops are ignored (a loop never discards its own
// vertex) and multiplicities are irrelevant to membership.
inline GreedyTrace greedy_acyclic(const MultiDigraph& m, const std::vector<int>& order) {
    std::vector<std::vector<int>> out(m.n);
    for (const auto& [u, v] : m.arcs)
        if (u != v) out[u].push_back(v);
    return detail::greedy_core(m.n, order, [&](int v) -> const std::vector<int>& { return out[v]; },
                               1.0);
}

// Halts once |A| exceeds floor(alpha_cap * n).
inline GreedyTrace greedy_truncated(const Digraph& d, const std::vector<int>& order,
                                    double alpha_cap) {
    if (!(alpha_cap > 0.0 && alpha_cap < 1.0))
        throw std::invalid_argument("alpha_cap must lie in (0, 1)");
    return detail::greedy_core(d.vertex_count(), order,
                               [&](int v) -> const std::vector<int>& { return d.out(v); },
                               alpha_cap);
}

inline GreedyTrace greedy_truncated(const MultiDigraph& m, const std::vector<int>& order,
                                    double alpha_cap) {
    if (!(alpha_cap > 0.0 && alpha_cap < 1.0))
        throw std::invalid_argument("alpha_cap must lie in (0, 1)");
    std::vector<std::vector<int>> out(m.n);
    for (const auto& [u, v] : m.arcs)
        if (u != v) out[u].push_back(v);
    return detail::greedy_core(m.n, order, [&](int v) -> const std::vector<int>& { return out[v]; },
                               alpha_cap);
}

// ---------------------------------------------------------------------------
// No-directed-triangle extractor.

namespace detail {

// First directed triangle u -> v -> w -> u, or empty.
inline std::vector<int> find_directed_triangle(const Digraph& d) {
    for (int u = 0; u < d.vertex_count(); ++u)
        for (int v : d.out(u))
            for (int w : d.out(v))
                if (w != u && d.has_arc(w, u)) return {u, v, w};
    return {};
}

inline VertexSet c3free_recurse(const Digraph& d, double delta) {
    const int n = d.vertex_count();
    if (n <= 1) {
        VertexSet all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        return all;
    }
    const double f = std::exp(delta * std::sqrt(std::log(static_cast<double>(n))));

    int hub = 0, hub_deg = -1;
    for (int v = 0; v < n; ++v) {
        int md = static_cast<int>(std::min(d.in(v).size(), d.out(v).size()));
        if (md > hub_deg) {
            hub_deg = md;
            hub = v;
        }
    }

    if (hub_deg < 2.0 * n / f) {
        // Low branch: every subgraph keeps a vertex with min(in, out) small,
        // so color with hub_deg + 1 colors and keep the largest class.
        auto ord = degeneracy_order(d, hub_deg);
        std::vector<int> palette(hub_deg + 1);
        for (int c = 0; c <= hub_deg; ++c) palette[c] = c + 1;
        Coloring col = color_from_degeneracy(d, ord, ListAssignment::uniform(n, palette));
        std::vector<int> count(hub_deg + 2, 0);
        for (int v = 0; v < n; ++v) ++count[col.color[v]];
        int best_color = 1;
        for (int c = 2; c <= hub_deg + 1; ++c)
            if (count[c] > count[best_color]) best_color = c;
        VertexSet cls;
        for (int v = 0; v < n; ++v)
            if (col.color[v] == best_color) cls.push_back(v);
        return cls;
    }

    // Common in-and-out neighborhood of the hub spans no arc (an arc inside
    // would close a directed triangle through the hub).
    VertexSet common;
    std::set_intersection(d.out(hub).begin(), d.out(hub).end(), d.in(hub).begin(),
                          d.in(hub).end(), std::back_inserter(common));
    if (static_cast<double>(common.size()) >= f) return common;

    // Recurse on the one-directional neighborhoods; no arc runs from the pure
    // out-side to the pure in-side, so the two extracted sets stay acyclic
    // together.
    VertexSet out_only, in_only;
    std::set_difference(d.out(hub).begin(), d.out(hub).end(), d.in(hub).begin(), d.in(hub).end(),
                        std::back_inserter(out_only));
    std::set_difference(d.in(hub).begin(), d.in(hub).end(), d.out(hub).begin(), d.out(hub).end(),
                        std::back_inserter(in_only));
    VertexSet result;
    for (int v : c3free_recurse(induced_subgraph(d, out_only), delta)) result.push_back(out_only[v]);
    for (int v : c3free_recurse(induced_subgraph(d, in_only), delta)) result.push_back(in_only[v]);
    return make_vertex_set(std::move(result));
}

}  // namespace detail

// Acyclic set in a digraph with no directed triangle (digons are allowed).
// Follows the recursive scheme: color when every min-side degree is small,
// otherwise take the hub's arc-free common neighborhood or recurse on the two
// one-directional sides.
inline VertexSet c3free_acyclic(const Digraph& d, double delta) {
    if (!(delta > 0.0 && delta < std::sqrt(std::log(4.0))))
        throw std::invalid_argument("delta must lie in (0, sqrt(ln 4))");
    auto tri = detail::find_directed_triangle(d);
    if (!tri.empty())
        throw std::invalid_argument("input has a directed triangle " + std::to_string(tri[0]) +
                                    "->" + std::to_string(tri[1]) + "->" + std::to_string(tri[2]) +
                                    "->" + std::to_string(tri[0]));
    return detail::c3free_recurse(d, delta);
}

// ---------------------------------------------------------------------------
// No-transitive-triangle extractor.

// Undirected graph of the forward arcs of d with respect to `order`:
// edge {u, v} iff the arc between u and v points forward. Exposed for tests.
inline std::vector<std::vector<int>> forward_graph(const Digraph& d,
                                                   const std::vector<int>& order) {
    const int n = d.vertex_count();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("order must be a permutation of the vertices");
        pos[v] = i;
    }
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : d.arcs())
        if (pos[u] < pos[v]) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    for (auto& nb : adj) nb = make_vertex_set(std::move(nb));
    return adj;
}

// Acyclic set in a digraph with no transitive triangle (arcs a->b, b->c,
// a->c), of size at least floor(sqrt(n)). The forward graph is triangle-free,
// any of its independent sets is acyclic in d (every directed cycle contains
// a forward arc), and triangle-freeness makes sqrt(n) constructive: a vertex
// of degree >= ceil(sqrt(n)) donates its neighborhood, otherwise min-degree
// greedy reaches ceil(n / ceil(sqrt(n))).
inline VertexSet tt3free_acyclic(const Digraph& d, const std::vector<int>& order,
                                 bool skip_check = false) {
    const int n = d.vertex_count();
    if (!skip_check) {
        for (int b = 0; b < n; ++b)
            for (int a : d.in(b))
                for (int c : d.out(b))
                    if (a != c && d.has_arc(a, c))
                        throw std::invalid_argument(
                            "input has a transitive triangle " + std::to_string(a) + "->" +
                            std::to_string(b) + "->" + std::to_string(c) + ", " +
                            std::to_string(a) + "->" + std::to_string(c));
    }
    if (n == 0) return {};
    auto adj = forward_graph(d, order);

    const int root = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    int hub = 0;
    for (int v = 1; v < n; ++v)
        if (adj[v].size() > adj[hub].size()) hub = v;
    if (static_cast<int>(adj[hub].size()) >= root) return adj[hub];

    // Min-degree greedy independent set.
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    VertexSet indep;
    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        indep.push_back(pick);
        std::vector<int> gone{pick};
        for (int u : adj[pick])
            if (alive[u]) gone.push_back(u);
        for (int u : gone) {
            alive[u] = 0;
            --remaining;
            for (int w : adj[u])
                if (alive[w]) --deg[w];
        }
    }
    return make_vertex_set(std::move(indep));
}

}  // namespace dichroma
