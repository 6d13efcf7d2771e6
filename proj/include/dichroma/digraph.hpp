#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core digraph representations. Vertices are dense integer ids 0..n-1; all
// samplers and file readers relabel into this range. Both adjacency
// directions are stored eagerly, sorted ascending.

namespace dichroma {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

using Arc = std::pair<int, int>;

inline VertexSet make_vertex_set(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

inline void check_vertex_range(const VertexSet& s, int n) {
    for (int v : s)
        if (v < 0 || v >= n) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
}

// Simple digraph: no loops, no parallel arcs (digons are allowed).
class Digraph {
public:
    Digraph() = default;

    explicit Digraph(int n) : n_(checked_size(n)), out_(n), in_(n) {}

    static Digraph from_arcs(int n, const std::vector<Arc>& arcs) {
        Digraph d(n);
        for (const auto& [u, v] : arcs) d.add_arc_unchecked(u, v);
        d.finalize();
        return d;
    }

    int vertex_count() const { return n_; }
    long long arc_count() const { return m_; }

    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }

    bool has_arc(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
        return std::binary_search(out_[u].begin(), out_[u].end(), v);
    }

    // True if u and v are joined in at least one direction.
    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

    std::vector<Arc> arcs() const {
        std::vector<Arc> a;
        a.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : out_[u]) a.emplace_back(u, v);
        return a;
    }

    bool operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

private:
    static int checked_size(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return n;
    }

    void add_arc_unchecked(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::out_of_range("arc endpoint out of range");
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        out_[u].push_back(v);
        in_[v].push_back(u);
        ++m_;
    }

    void finalize() {
        for (int v = 0; v < n_; ++v) {
            std::sort(out_[v].begin(), out_[v].end());
            if (std::adjacent_find(out_[v].begin(), out_[v].end()) != out_[v].end())
                throw std::invalid_argument("parallel arc out of vertex " + std::to_string(v));
            std::sort(in_[v].begin(), in_[v].end());
        }
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

// Directed multigraph: loops and parallel arcs allowed. Arc multiset kept as
// a sorted list of ordered pairs.
struct MultiDigraph {
    int n = 0;
    std::vector<Arc> arcs;

    static MultiDigraph from_arcs(int n, std::vector<Arc> arcs) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        for (const auto& [u, v] : arcs)
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::out_of_range("arc endpoint out of range");
        std::sort(arcs.begin(), arcs.end());
        return MultiDigraph{n, std::move(arcs)};
    }

    long long arc_count() const { return static_cast<long long>(arcs.size()); }
};

// Requires no loops and no parallel arcs (digons are fine).
inline Digraph to_digraph(const MultiDigraph& m) {
    return Digraph::from_arcs(m.n, m.arcs);
}

// Induced subdigraph on `s`; vertex i of the result is s[i].
inline Digraph induced_subgraph(const Digraph& d, const VertexSet& s) {
    check_vertex_range(s, d.vertex_count());
    std::vector<int> local(d.vertex_count(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) local[s[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (int u : s)
        for (int v : d.out(u))
            if (local[v] >= 0) arcs.emplace_back(local[u], local[v]);
    return Digraph::from_arcs(static_cast<int>(s.size()), arcs);
}

// ---------------------------------------------------------------------------
// Text formats.
//   DIGRAPH n m       followed by m lines "u v"
//   MULTIDIGRAPH n m  same, repeated lines encode multiplicity, loops "v v"
// Arcs are written sorted, 0-based, LF-terminated.

inline void write_digraph(std::ostream& os, const Digraph& d) {
    os << "DIGRAPH " << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const auto& [u, v] : d.arcs()) os << u << ' ' << v << '\n';
}

inline void write_multidigraph(std::ostream& os, const MultiDigraph& m) {
    os << "MULTIDIGRAPH " << m.n << ' ' << m.arcs.size() << '\n';
    auto sorted = m.arcs;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [u, v] : sorted) os << u << ' ' << v << '\n';
}

namespace detail {
inline std::vector<Arc> read_arc_lines(std::istream& is, long long m) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw std::runtime_error("truncated arc list");
        arcs.emplace_back(u, v);
    }
    return arcs;
}
}  // namespace detail

inline Digraph read_digraph(std::istream& is) {
    std::string tag;
    int n;
    long long m;
    if (!(is >> tag >> n >> m) || tag != "DIGRAPH")
        throw std::runtime_error("expected DIGRAPH header");
    return Digraph::from_arcs(n, detail::read_arc_lines(is, m));
}

inline MultiDigraph read_multidigraph(std::istream& is) {
    std::string tag;
    int n;
    long long m;
    if (!(is >> tag >> n >> m) || tag != "MULTIDIGRAPH")
        throw std::runtime_error("expected MULTIDIGRAPH header");
    return MultiDigraph::from_arcs(n, detail::read_arc_lines(is, m));
}

}  // namespace dichroma
