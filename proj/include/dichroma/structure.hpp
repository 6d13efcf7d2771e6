#pragma once

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dichroma/digraph.hpp"

// Structural queries: acyclicity, strongly connected components, digirth,
// circumference and the set of cycle lengths. Longest-cycle search is
// exponential; every exhaustive routine takes an explicit node budget and
// fails loudly instead of truncating silently.

namespace dichroma {

inline constexpr long long kDefaultNodeBudget = 10'000'000;

// An exhaustive search ran out of its node budget. `best` carries the best
// bound established before giving up; its meaning depends on the operation.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, long long best = -1)
        : std::runtime_error(what), best_(best) {}
    long long best() const { return best_; }

private:
    long long best_;
};

// ---------------------------------------------------------------------------
// Acyclicity (iterative three-color DFS on the induced subdigraph).

inline bool is_acyclic(const Digraph& d, const VertexSet& s) {
    check_vertex_range(s, d.vertex_count());
    std::vector<signed char> state(d.vertex_count(), -1);  // -1 outside, 0 new, 1 open, 2 done
    for (int v : s) state[v] = 0;
    std::vector<std::pair<int, std::size_t>> stack;
    for (int root : s) {
        if (state[root] != 0) continue;
        state[root] = 1;
        stack.assign(1, {root, 0});
        while (!stack.empty()) {
            int v = stack.back().first;
            const auto& succ = d.out(v);
            if (stack.back().second < succ.size()) {
                int w = succ[stack.back().second++];
                if (state[w] == 1) return false;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

inline bool is_acyclic(const Digraph& d) {
    VertexSet all(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) all[v] = v;
    return is_acyclic(d, all);
}

// ---------------------------------------------------------------------------
// Strongly connected components (iterative Tarjan). Components come out in
// reverse topological order of the condensation: for an arc u -> v across
// components, v's component is listed before u's. Each component's vertex
// list is sorted ascending.

inline std::vector<std::vector<int>> strongly_connected_components(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<signed char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int next_index = 0;

    std::vector<std::pair<int, std::size_t>> call;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        call.assign(1, {root, 0});
        while (!call.empty()) {
            int v = call.back().first;
            const auto& succ = d.out(v);
            if (call.back().second < succ.size()) {
                int w = succ[call.back().second++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    std::vector<int> c;
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        c.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(c.begin(), c.end());
                    comps.push_back(std::move(c));
                }
                call.pop_back();
                if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[v]);
            }
        }
    }
    return comps;
}

inline bool is_strong(const Digraph& d) {
    return d.vertex_count() <= 1 || strongly_connected_components(d).size() == 1;
}

// ---------------------------------------------------------------------------
// Digirth: length of a shortest directed cycle, nullopt if acyclic.
// BFS from every vertex; the shortest cycle through start v closes on an
// in-neighbor of v.

inline std::optional<int> digirth(const Digraph& d) {
    const int n = d.vertex_count();
    std::optional<int> best;
    std::vector<int> dist(n);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.assign(1, s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            if (best && dist[v] + 1 >= *best) continue;  // cannot improve
            for (int w : d.out(v)) {
                if (w == s) {
                    int len = dist[v] + 1;
                    if (!best || len < *best) best = len;
                } else if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (best && *best == 2) return best;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Simple-cycle enumeration. Every directed simple cycle is visited exactly
// once, as a vertex sequence starting at its smallest vertex. Roots are
// scanned ascending; from root s the DFS stays inside the strongly connected
// component of s within the subdigraph induced on {v >= s}, which prevents
// wandering into parts that cannot close a cycle. The budget counts arc
// expansions. `visit` may return false to stop early.

inline void for_each_cycle(const Digraph& d, long long budget,
                           const std::function<bool(const std::vector<int>&)>& visit) {
    const int n = d.vertex_count();
    long long nodes = 0;
    std::vector<int> path;
    std::vector<signed char> on_path(n, 0), allowed(n, 0);

    for (int s = 0; s < n; ++s) {
        // Component of s among vertices >= s.
        VertexSet tail;
        for (int v = s; v < n; ++v) tail.push_back(v);
        Digraph sub = induced_subgraph(d, tail);  // local id of v is v - s
        std::fill(allowed.begin(), allowed.end(), 0);
        bool root_in_cycle = false;
        for (const auto& c : strongly_connected_components(sub)) {
            if (std::binary_search(c.begin(), c.end(), 0)) {
                if (c.size() >= 2) {
                    for (int local : c) allowed[local + s] = 1;
                    root_in_cycle = true;
                }
                break;
            }
        }
        if (!root_in_cycle) continue;

        path.assign(1, s);
        on_path[s] = 1;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        while (!stack.empty()) {
            int v = stack.back().first;
            const auto& succ = d.out(v);
            if (stack.back().second < succ.size()) {
                int w = succ[stack.back().second++];
                if (w < s || !allowed[w]) continue;
                if (++nodes > budget)
                    throw budget_error("cycle enumeration exceeded node budget", nodes);
                if (w == s) {
                    if (!visit(path)) return;
                } else if (!on_path[w]) {
                    on_path[w] = 1;
                    path.push_back(w);
                    stack.push_back({w, 0});
                }
            } else {
                on_path[v] = 0;
                path.pop_back();
                stack.pop_back();
            }
        }
    }
}

// Exact set of directed cycle lengths.
inline std::set<int> cycle_length_set(const Digraph& d, long long budget = kDefaultNodeBudget) {
    std::set<int> lengths;
    for_each_cycle(d, budget, [&](const std::vector<int>& cycle) {
        lengths.insert(static_cast<int>(cycle.size()));
        return true;
    });
    return lengths;
}

// ---------------------------------------------------------------------------
// Circumference: length of a longest directed cycle, with a witness.
// Exhaustive per-SCC path search; a component is finished early once a cycle
// spanning the whole component is found.

struct CircumferenceResult {
    std::optional<int> length;  // nullopt: acyclic
    std::vector<int> witness;   // a longest cycle when length is set
};

inline CircumferenceResult circumference(const Digraph& d, long long budget = kDefaultNodeBudget) {
    CircumferenceResult best;
    long long nodes = 0;
    auto comps = strongly_connected_components(d);
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });

    for (const auto& comp : comps) {
        const int size = static_cast<int>(comp.size());
        if (size < 2 || (best.length && size <= *best.length)) continue;
        Digraph sub = induced_subgraph(d, comp);
        std::vector<signed char> on_path(size, 0);
        std::vector<int> path;
        for (int s = 0; s < size; ++s) {
            if (best.length && *best.length == size) break;
            path.assign(1, s);
            std::fill(on_path.begin(), on_path.end(), 0);
            on_path[s] = 1;
            std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
            while (!stack.empty()) {
                int v = stack.back().first;
                const auto& succ = sub.out(v);
                if (stack.back().second < succ.size()) {
                    int w = succ[stack.back().second++];
                    if (w < s) continue;
                    if (++nodes > budget)
                        throw budget_error("circumference search exceeded node budget",
                                           best.length ? *best.length : 0);
                    if (w == s) {
                        int len = static_cast<int>(path.size());
                        if (!best.length || len > *best.length) {
                            best.length = len;
                            best.witness.clear();
                            for (int u : path) best.witness.push_back(comp[u]);
                            if (len == size) break;  // spans the component
                        }
                    } else if (!on_path[w]) {
                        on_path[w] = 1;
                        path.push_back(w);
                        stack.push_back({w, 0});
                    }
                } else {
                    on_path[v] = 0;
                    path.pop_back();
                    stack.pop_back();
                }
            }
        }
    }
    return best;
}

}  // namespace dichroma
