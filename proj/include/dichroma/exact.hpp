#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dichroma/structure.hpp"

// Exact solvers for the maximum acyclic set, the dichromatic number and
// L-colorability. Exponential-time searches, intended for small instances;
// every heuristic and theorem bound in this library is checked against them.
// Tie-breaking is lowest-vertex-id-first throughout, so outputs are
// deterministic.

namespace dichroma {

// ---------------------------------------------------------------------------
// Colorings and list assignments.

// Per-vertex positive colors. Validity (every color class acyclic) is
// checkable, never assumed.
struct Coloring {
    std::vector<int> color;
};

inline int color_count(const Coloring& c) {
    std::vector<int> distinct(c.color);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return static_cast<int>(distinct.size());
}

// Every color positive and every color class acyclic.
inline bool is_valid_coloring(const Digraph& d, const Coloring& c) {
    const int n = d.vertex_count();
    if (static_cast<int>(c.color.size()) != n) return false;
    std::vector<int> palette;
    for (int v = 0; v < n; ++v) {
        if (c.color[v] < 1) return false;
        palette.push_back(c.color[v]);
    }
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    for (int col : palette) {
        VertexSet cls;
        for (int v = 0; v < n; ++v)
            if (c.color[v] == col) cls.push_back(v);
        if (!is_acyclic(d, cls)) return false;
    }
    return true;
}

// Per-vertex finite sets of admissible positive colors; lists are sorted,
// duplicate-free and nonempty.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    static ListAssignment uniform(int n, std::vector<int> list) {
        list = make_vertex_set(std::move(list));
        if (list.empty()) throw std::invalid_argument("empty color list");
        ListAssignment l;
        l.lists.assign(n, list);
        return l;
    }

    void validate() const {
        for (const auto& list : lists) {
            if (list.empty()) throw std::invalid_argument("empty color list");
            for (std::size_t i = 0; i < list.size(); ++i) {
                if (list[i] < 1) throw std::invalid_argument("colors must be positive");
                if (i > 0 && list[i] <= list[i - 1])
                    throw std::invalid_argument("lists must be sorted and duplicate-free");
            }
        }
    }
};

// Text format: "LISTS n" then n lines "v c1 c2 ... cj".
inline void write_lists(std::ostream& os, const ListAssignment& l) {
    os << "LISTS " << l.lists.size() << '\n';
    for (std::size_t v = 0; v < l.lists.size(); ++v) {
        os << v;
        for (int c : l.lists[v]) os << ' ' << c;
        os << '\n';
    }
}

inline ListAssignment read_lists(std::istream& is) {
    std::string tag;
    int n;
    if (!(is >> tag >> n) || tag != "LISTS" || n < 0)
        throw std::runtime_error("expected LISTS header");
    is.ignore();
    ListAssignment l;
    l.lists.assign(n, {});
    for (int i = 0; i < n; ++i) {
        std::string line;
        if (!std::getline(is, line)) throw std::runtime_error("truncated list assignment");
        std::istringstream ls(line);
        int v;
        if (!(ls >> v) || v < 0 || v >= n) throw std::runtime_error("bad vertex id in lists");
        int c;
        std::vector<int> colors;
        while (ls >> c) colors.push_back(c);
        l.lists[v] = make_vertex_set(std::move(colors));
    }
    l.validate();
    return l;
}

// ---------------------------------------------------------------------------
// Shared search helpers.

namespace detail {

struct search_abort {};  // internal: budget ran out mid-search

// Shortest directed cycle among `active` vertices, lowest-start tie-break;
// empty if none.
inline std::vector<int> shortest_active_cycle(const Digraph& d, const std::vector<char>& active) {
    const int n = d.vertex_count();
    std::vector<int> best;
    std::vector<int> dist(n), pred(n);
    for (int s = 0; s < n; ++s) {
        if (!active[s]) continue;
        if (!best.empty() && best.size() == 2) break;
        std::fill(dist.begin(), dist.end(), -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        pred[s] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            if (!best.empty() && dist[v] + 1 >= static_cast<int>(best.size())) continue;
            for (int w : d.out(v)) {
                if (!active[w]) continue;
                if (w == s) {
                    std::vector<int> cycle;
                    for (int u = v; u != -1; u = pred[u]) cycle.push_back(u);
                    std::reverse(cycle.begin(), cycle.end());
                    if (best.empty() || cycle.size() < best.size()) best = cycle;
                } else if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    pred[w] = v;
                    queue.push_back(w);
                }
            }
        }
    }
    return best;
}

// Maximal acyclic set by greedy insertion in id order; cheap bound seeding.
inline VertexSet maximal_acyclic_greedy(const Digraph& d) {
    VertexSet acc;
    for (int v = 0; v < d.vertex_count(); ++v) {
        acc.push_back(v);
        if (!is_acyclic(d, acc)) acc.pop_back();
    }
    return acc;
}

// Greedy clique in the digon graph; any such clique needs pairwise distinct
// colors, so its size is a sound lower bound for the dichromatic number.
inline int digon_clique_greedy(const Digraph& d) {
    std::vector<int> clique;
    for (int v = 0; v < d.vertex_count(); ++v) {
        bool ok = true;
        for (int u : clique)
            if (!(d.has_arc(u, v) && d.has_arc(v, u))) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

// Subset-enumeration maximum acyclic set, exact for n <= 20. acyclic[S] is
// decided through the lowest in-source of S.
inline VertexSet alpha_by_subsets(const Digraph& d) {
    const int n = d.vertex_count();
    if (n > 20) throw std::invalid_argument("subset enumeration limited to n <= 20");
    if (n == 0) return {};
    std::vector<unsigned> inmask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : d.in(v)) inmask[v] |= 1u << u;
    const std::size_t total = std::size_t{1} << n;
    std::vector<char> acyclic(total, 0);
    acyclic[0] = 1;
    unsigned best_mask = 0;
    int best_size = 0;
    for (std::size_t s = 1; s < total; ++s) {
        unsigned mask = static_cast<unsigned>(s);
        for (unsigned rest = mask; rest != 0; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            if ((inmask[v] & mask) == 0) {
                acyclic[s] = acyclic[s & ~(1u << v)];
                break;
            }
        }
        if (acyclic[s]) {
            int size = __builtin_popcount(mask);
            if (size > best_size) {
                best_size = size;
                best_mask = mask;
            }
        }
    }
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (best_mask & (1u << v)) out.push_back(v);
    return out;
}

// Branch-and-bound minimum feedback vertex set on a single graph. Branches on
// the vertices of a shortest cycle: vertex i of the cycle goes into the FVS
// while vertices 0..i-1 are pinned outside it.
class FvsSearch {
public:
    FvsSearch(const Digraph& d, long long budget) : d_(d), budget_(budget) {
        VertexSet seed = maximal_acyclic_greedy(d);
        best_fvs_ = d.vertex_count() - static_cast<int>(seed.size());
        best_keep_.assign(d.vertex_count(), 0);
        for (int v : seed) best_keep_[v] = 1;
    }

    VertexSet run() {
        std::vector<char> removed(d_.vertex_count(), 0), kept(d_.vertex_count(), 0);
        dfs(removed, kept, 0);
        VertexSet out;
        for (int v = 0; v < d_.vertex_count(); ++v)
            if (best_keep_[v]) out.push_back(v);
        return out;
    }

    // Best acyclic set found so far (valid even after an abort).
    VertexSet best_found() const {
        VertexSet out;
        for (int v = 0; v < d_.vertex_count(); ++v)
            if (best_keep_[v]) out.push_back(v);
        return out;
    }

    long long nodes_used() const { return nodes_; }

private:
    // Greedy vertex-disjoint cycle packing gives a lower bound on the number
    // of removals still required.
    int packing_bound(std::vector<char> active) {
        int packed = 0;
        for (;;) {
            auto cycle = shortest_active_cycle(d_, active);
            if (cycle.empty()) break;
            ++packed;
            for (int v : cycle) active[v] = 0;
        }
        return packed;
    }

    void dfs(std::vector<char>& removed, std::vector<char>& kept, int removed_count) {
        if (++nodes_ > budget_) throw search_abort{};
        std::vector<char> active(d_.vertex_count());
        for (int v = 0; v < d_.vertex_count(); ++v) active[v] = !removed[v];
        auto cycle = shortest_active_cycle(d_, active);
        if (cycle.empty()) {
            if (removed_count < best_fvs_) {
                best_fvs_ = removed_count;
                for (int v = 0; v < d_.vertex_count(); ++v) best_keep_[v] = !removed[v];
            }
            return;
        }
        if (removed_count + packing_bound(active) >= best_fvs_) return;
        std::vector<int> pinned;
        for (int v : cycle) {
            if (kept[v]) continue;
            removed[v] = 1;
            dfs(removed, kept, removed_count + 1);
            removed[v] = 0;
            kept[v] = 1;
            pinned.push_back(v);
        }
        for (int v : pinned) kept[v] = 0;
    }

    const Digraph& d_;
    long long budget_;
    long long nodes_ = 0;
    int best_fvs_;
    std::vector<char> best_keep_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Maximum acyclic set.

// Budget ran out; best() is the size of `best_set`, the largest acyclic set
// established before the failure.
class alpha_budget_error : public budget_error {
public:
    alpha_budget_error(VertexSet best_set)
        : budget_error("max_acyclic_set exceeded node budget",
                       static_cast<long long>(best_set.size())),
          best_set_(std::move(best_set)) {}
    const VertexSet& best_set() const { return best_set_; }

private:
    VertexSet best_set_;
};

// Exact maximum acyclic set: n minus a minimum feedback vertex set, computed
// per strongly connected component by branch-and-bound on shortest cycles.
// When the budget runs out on a component with at most 20 vertices, subset
// enumeration finishes the component exactly; otherwise the failure carries
// the best acyclic set found.
inline VertexSet max_acyclic_set(const Digraph& d, long long budget = kDefaultNodeBudget) {
    VertexSet result;
    long long used = 0;
    auto comps = strongly_connected_components(d);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& comp = comps[ci];
        if (comp.size() == 1) {
            result.push_back(comp[0]);
            continue;
        }
        Digraph sub = induced_subgraph(d, comp);
        detail::FvsSearch search(sub, budget - used);
        VertexSet local;
        try {
            local = search.run();
        } catch (const detail::search_abort&) {
            if (sub.vertex_count() <= 20) {
                local = detail::alpha_by_subsets(sub);
            } else {
                // Assemble the best known acyclic set: finished components,
                // the best found here, greedy completion elsewhere.
                VertexSet fallback = result;
                for (int v : search.best_found()) fallback.push_back(comp[v]);
                for (std::size_t cj = ci + 1; cj < comps.size(); ++cj) {
                    Digraph rest = induced_subgraph(d, comps[cj]);
                    for (int v : detail::maximal_acyclic_greedy(rest))
                        fallback.push_back(comps[cj][v]);
                }
                throw alpha_budget_error(make_vertex_set(std::move(fallback)));
            }
        }
        used += search.nodes_used();
        for (int v : local) result.push_back(comp[v]);
    }
    return make_vertex_set(std::move(result));
}

// ---------------------------------------------------------------------------
// Dichromatic number.

struct DichromaticResult {
    int k = 0;
    Coloring coloring;
};

// Budget ran out; best() is an upper bound witnessed by `witness`.
class chi_budget_error : public budget_error {
public:
    chi_budget_error(int upper, Coloring witness)
        : budget_error("dichromatic_number exceeded node budget", upper),
          witness_(std::move(witness)) {}
    const Coloring& witness() const { return witness_; }

private:
    Coloring witness_;
};

namespace detail {

// True iff color class `c` stays acyclic when v joins: a new monochromatic
// cycle would have to pass through v.
inline bool class_stays_acyclic(const Digraph& d, const std::vector<int>& color, int c, int v) {
    std::vector<int> stack{v};
    std::vector<char> seen(d.vertex_count(), 0);
    seen[v] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : d.out(u)) {
            if (w == v) return false;
            if (!seen[w] && color[w] == c) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return true;
}

// Greedy sequential coloring, smallest admissible color; always succeeds.
inline Coloring greedy_coloring(const Digraph& d) {
    const int n = d.vertex_count();
    Coloring col;
    col.color.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int c = 1;; ++c) {
            if (class_stays_acyclic(d, col.color, c, v)) {
                col.color[v] = c;
                break;
            }
        }
    }
    return col;
}

// Can the graph be colored with colors 1..k, every class acyclic? Budget
// counts assignment attempts.
inline bool k_colorable(const Digraph& d, int k, std::vector<int>& out_color, long long budget,
                        long long& nodes) {
    const int n = d.vertex_count();
    std::vector<int> color(n, 0);
    // Backtracking over vertices in id order; color cap max_used+1 breaks
    // color-permutation symmetry.
    std::vector<int> max_used(n + 1, 0);
    int v = 0;
    while (v >= 0) {
        if (v == n) {
            out_color = color;
            return true;
        }
        int c = color[v] + 1;
        int cap = std::min(k, max_used[v] + 1);
        bool advanced = false;
        for (; c <= cap; ++c) {
            if (++nodes > budget) throw search_abort{};
            if (class_stays_acyclic(d, color, c, v)) {
                color[v] = c;
                max_used[v + 1] = std::max(max_used[v], c);
                ++v;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            color[v] = 0;
            --v;
        }
    }
    return false;
}

}  // namespace detail

// Exact dichromatic number with witness coloring. Decomposes over strongly
// connected components (every directed cycle lies inside one), solves each
// exactly and reuses colors across components, so k is the max over
// components. The per-component lower bound starts from the size of a digon
// clique and, when the exact maximum acyclic set is affordable, from
// ceil(size / alpha).
inline DichromaticResult dichromatic_number(const Digraph& d, long long budget = kDefaultNodeBudget) {
    const int n = d.vertex_count();
    DichromaticResult res;
    res.coloring.color.assign(n, 1);
    res.k = n == 0 ? 0 : 1;
    long long nodes = 0;
    auto comps = strongly_connected_components(d);
    for (const auto& comp : comps) {
        if (comp.size() == 1) continue;  // a single vertex is acyclic
        Digraph sub = induced_subgraph(d, comp);
        const int nc = sub.vertex_count();

        Coloring greedy = detail::greedy_coloring(sub);
        int ub = color_count(greedy);
        int lb = std::max(1, detail::digon_clique_greedy(sub));
        if (nc <= 20) {
            try {
                VertexSet alpha = max_acyclic_set(sub, budget - nodes);
                lb = std::max(lb, (nc + static_cast<int>(alpha.size()) - 1) /
                                      static_cast<int>(alpha.size()));
            } catch (const alpha_budget_error&) {
                // keep the sound lower bound we have
            }
        }

        std::vector<int> local(sub.vertex_count());
        int kc = ub;
        bool solved = false;
        try {
            for (int k = lb; k < ub && !solved; ++k) {
                if (detail::k_colorable(sub, k, local, budget, nodes)) {
                    kc = k;
                    solved = true;
                }
            }
        } catch (const detail::search_abort&) {
            Coloring witness = detail::greedy_coloring(d);
            throw chi_budget_error(color_count(witness), std::move(witness));
        }
        if (!solved) local = greedy.color;

        for (std::size_t i = 0; i < comp.size(); ++i) res.coloring.color[comp[i]] = local[i];
        res.k = std::max(res.k, kc);
    }
    return res;
}

// ---------------------------------------------------------------------------
// L-colorability for one given list assignment (three-valued).

enum class Verdict { colorable, not_colorable, unknown };

struct ListColorResult {
    Verdict verdict = Verdict::unknown;
    std::optional<Coloring> coloring;  // engaged iff colorable
};

// Exhaustive with pruning: vertices in id order, colors from L(v) ascending,
// a branch dies as soon as a color class contains a directed cycle. Budget
// counts assignment attempts; exceeding it yields Verdict::unknown.
inline ListColorResult is_list_colorable(const Digraph& d, const ListAssignment& l,
                                         long long budget = kDefaultNodeBudget) {
    const int n = d.vertex_count();
    if (static_cast<int>(l.lists.size()) != n)
        throw std::invalid_argument("list assignment size mismatch");
    l.validate();
    long long nodes = 0;
    std::vector<int> color(n, 0);
    std::vector<std::size_t> pos(n, 0);
    int v = 0;
    while (v >= 0) {
        if (v == n) {
            Coloring col;
            col.color = color;
            return {Verdict::colorable, col};
        }
        bool advanced = false;
        while (pos[v] < l.lists[v].size()) {
            int c = l.lists[v][pos[v]++];
            if (++nodes > budget) return {Verdict::unknown, std::nullopt};
            if (detail::class_stays_acyclic(d, color, c, v)) {
                color[v] = c;
                advanced = true;
                break;
            }
        }
        if (advanced) {
            ++v;
            if (v < n) pos[v] = 0;
        } else {
            color[v] = 0;
            --v;
            if (v >= 0) color[v] = 0;
        }
    }
    return {Verdict::not_colorable, std::nullopt};
}

}  // namespace dichroma
