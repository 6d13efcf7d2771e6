#pragma once

#include <set>
#include <vector>

#include "dichroma/exact.hpp"

// Degeneracy machinery: a digraph whose cycle lengths all lie in a k-set is
// k-degenerate, a k-degeneracy order can be peeled off greedily, and lists of
// size k+1 then color it with no monochromatic directed cycle. Also the
// reduction of acyclic coloring to strongly connected components.

namespace dichroma {

enum class Side : unsigned char { in_side, out_side };

// A peel order v_1..v_n with parameter k: each v_j has indegree or outdegree
// at most k inside {v_1..v_j}. `side` records, per vertex, which of the two
// neighborhoods was small when the vertex was peeled.
struct DegeneracyOrder {
    std::vector<int> order;
    int k = 0;
    std::vector<Side> side;  // indexed by vertex id
};

class not_degenerate_error : public std::runtime_error {
public:
    not_degenerate_error(int k, VertexSet stalled)
        : std::runtime_error("digraph is not " + std::to_string(k) +
                             "-degenerate; peeling stalled on " +
                             std::to_string(stalled.size()) + " vertices"),
          stalled_(std::move(stalled)) {}
    // The remaining subdigraph in which every vertex has min(indeg, outdeg) > k.
    const VertexSet& stalled() const { return stalled_; }

private:
    VertexSet stalled_;
};

namespace detail {

// Greedy peel of vertices with min(indeg, outdeg) <= k, lowest id first.
// Removals never shrink the eligible set (degrees only drop), so the greedy
// is a complete decision procedure: if it stalls, the leftover subdigraph
// witnesses that the graph is not k-degenerate.
struct PeelResult {
    std::vector<int> order;       // in peel order (reversed degeneracy order)
    std::vector<Side> side;       // by vertex id
    VertexSet stalled;            // nonempty iff the peel failed
};

inline PeelResult peel(const Digraph& d, int k) {
    const int n = d.vertex_count();
    std::vector<int> indeg(n), outdeg(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) {
        indeg[v] = static_cast<int>(d.in(v).size());
        outdeg[v] = static_cast<int>(d.out(v).size());
    }
    std::set<int> eligible;  // ordered by id
    auto is_eligible = [&](int v) { return std::min(indeg[v], outdeg[v]) <= k; };
    for (int v = 0; v < n; ++v)
        if (is_eligible(v)) eligible.insert(v);

    PeelResult res;
    res.side.assign(n, Side::in_side);
    while (!eligible.empty()) {
        int v = *eligible.begin();
        eligible.erase(eligible.begin());
        removed[v] = 1;
        // The smaller side is the one at most k; ties go to the in-side.
        res.side[v] = (indeg[v] <= outdeg[v]) ? Side::in_side : Side::out_side;
        res.order.push_back(v);
        for (int w : d.out(v)) {
            if (!removed[w]) {
                --indeg[w];
                if (is_eligible(w)) eligible.insert(w);
            }
        }
        for (int w : d.in(v)) {
            if (!removed[w]) {
                --outdeg[w];
                if (is_eligible(w)) eligible.insert(w);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!removed[v]) res.stalled.push_back(v);
    return res;
}

}  // namespace detail

// True iff greedy peeling with threshold k empties the graph.
inline bool verify_degenerate(const Digraph& d, int k) {
    if (k < 0) throw std::invalid_argument("negative degeneracy parameter");
    return detail::peel(d, k).stalled.empty();
}

// Peel-and-prepend: the last peeled vertex comes first, so each vertex sees
// only its not-yet-peeled prefix. Throws naming the stalled subgraph when the
// graph is not k-degenerate.
inline DegeneracyOrder degeneracy_order(const Digraph& d, int k) {
    if (k < 0) throw std::invalid_argument("negative degeneracy parameter");
    auto res = detail::peel(d, k);
    if (!res.stalled.empty()) throw not_degenerate_error(k, std::move(res.stalled));
    DegeneracyOrder ord;
    ord.k = k;
    ord.side = std::move(res.side);
    ord.order.assign(res.order.rbegin(), res.order.rend());
    return ord;
}

// Checks the defining invariant of a degeneracy order directly.
inline bool validate_degeneracy_order(const Digraph& d, const DegeneracyOrder& ord) {
    const int n = d.vertex_count();
    if (static_cast<int>(ord.order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = ord.order[i];
        if (v < 0 || v >= n || pos[v] != -1) return false;
        pos[v] = i;
    }
    for (int j = 0; j < n; ++j) {
        int v = ord.order[j];
        int back_in = 0, back_out = 0;
        for (int u : d.in(v))
            if (pos[u] < j) ++back_in;
        for (int u : d.out(v))
            if (pos[u] < j) ++back_out;
        if (std::min(back_in, back_out) > ord.k) return false;
    }
    return true;
}

// Reads off a list coloring along a degeneracy order: vertex v_j avoids the
// colors of A_j, the smaller of its back-in- and back-out-neighborhoods
// (|A_j| <= k, so lists of size k+1 always leave a color). The result has no
// monochromatic directed cycle: the largest-indexed vertex of a cycle has a
// cycle neighbor on each side, hence one in A_j, colored differently.
inline Coloring color_from_degeneracy(const Digraph& d, const DegeneracyOrder& ord,
                                      const ListAssignment& l) {
    const int n = d.vertex_count();
    if (static_cast<int>(l.lists.size()) != n)
        throw std::invalid_argument("list assignment size mismatch");
    l.validate();
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(l.lists[v].size()) < ord.k + 1)
            throw std::invalid_argument("list of vertex " + std::to_string(v) +
                                        " has fewer than k+1 = " + std::to_string(ord.k + 1) +
                                        " colors");
    if (!validate_degeneracy_order(d, ord))
        throw std::invalid_argument("invalid degeneracy order for this digraph");

    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) pos[ord.order[i]] = i;
    Coloring col;
    col.color.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        int v = ord.order[j];
        std::vector<int> back_in, back_out;
        for (int u : d.in(v))
            if (pos[u] < j) back_in.push_back(u);
        for (int u : d.out(v))
            if (pos[u] < j) back_out.push_back(u);
        const auto& a_j = back_in.size() <= back_out.size() ? back_in : back_out;
        if (static_cast<int>(a_j.size()) > ord.k)
            throw std::invalid_argument("degeneracy order violates |A_j| <= k");
        std::set<int> banned;
        for (int u : a_j) banned.insert(col.color[u]);
        for (int c : l.lists[v]) {
            if (!banned.count(c)) {
                col.color[v] = c;
                break;
            }
        }
    }
    return col;
}

// Applies `solve` per strongly connected component (components are passed as
// standalone digraphs, vertices relabelled 0..size-1) and recombines. Each
// component's palette is normalized to 1..k_c, and colors are reused across
// components: every directed cycle lies inside one component, so the combined
// coloring stays valid and uses max_c k_c colors.
template <typename Solver>
std::pair<Coloring, int> scc_reduce(const Digraph& d, Solver&& solve) {
    const int n = d.vertex_count();
    Coloring combined;
    combined.color.assign(n, 1);
    int colors = n == 0 ? 0 : 1;
    for (const auto& comp : strongly_connected_components(d)) {
        Digraph sub = induced_subgraph(d, comp);
        Coloring local = solve(sub);
        if (static_cast<int>(local.color.size()) != sub.vertex_count())
            throw std::invalid_argument("component solver returned a coloring of wrong size");
        // Normalize the palette to 1..k_c, keeping the solver's color order.
        std::vector<int> palette(local.color);
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            int c = static_cast<int>(std::lower_bound(palette.begin(), palette.end(),
                                                      local.color[i]) -
                                     palette.begin()) +
                    1;
            combined.color[comp[i]] = c;
        }
        colors = std::max(colors, static_cast<int>(palette.size()));
    }
    return {combined, colors};
}

}  // namespace dichroma
