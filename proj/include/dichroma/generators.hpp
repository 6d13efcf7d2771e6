#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "dichroma/exact.hpp"
#include "dichroma/rng.hpp"

// Instance sources: the directed configuration model (with rejection down to
// simple digraphs and oriented graphs), the binomial oriented model, random
// and layered tournaments, modular blow-ups, and the Eulerian-orientation
// counting used to sanity-check the model itself.

namespace dichroma {

// ---------------------------------------------------------------------------
// Directed configuration model.

// A bijection between nr out-points and nr in-points. Point a of vertex i is
// i*r + a; pairing[p] is the in-point matched with out-point p.
struct ConfigPairing {
    int n = 0, r = 0;
    std::vector<int> pairing;

    MultiDigraph to_multidigraph() const {
        std::vector<Arc> arcs;
        arcs.reserve(pairing.size());
        for (std::size_t p = 0; p < pairing.size(); ++p)
            arcs.emplace_back(static_cast<int>(p) / std::max(r, 1),
                              pairing[p] / std::max(r, 1));
        return MultiDigraph::from_arcs(n, std::move(arcs));
    }
};

// Uniform over all (nr)! pairings, by Fisher-Yates on the in-point array. The
// resulting multidigraph is exactly r-in- and r-out-regular, counting
// multiplicities and loops.
inline ConfigPairing sample_directed_configuration(int n, int r, std::uint64_t seed) {
    if (n < 1 || r < 0) throw std::invalid_argument("need n >= 1 and r >= 0");
    ConfigPairing cp;
    cp.n = n;
    cp.r = r;
    cp.pairing.resize(static_cast<std::size_t>(n) * r);
    for (std::size_t i = 0; i < cp.pairing.size(); ++i) cp.pairing[i] = static_cast<int>(i);
    Rng rng(seed);
    rng.shuffle(cp.pairing);
    return cp;
}

// ---------------------------------------------------------------------------
// Simplicity classification.

// loops: loop arcs, with multiplicity. parallel_arcs: arc copies beyond the
// first of each ordered pair. digons: unordered pairs {u, v} with arcs in both
// directions, regardless of multiplicities.
struct SimplicityReport {
    long long loops = 0;
    long long parallel_arcs = 0;
    long long digons = 0;

    bool simple() const { return loops == 0 && parallel_arcs == 0; }
    bool oriented() const { return simple() && digons == 0; }
};

inline SimplicityReport classify(const MultiDigraph& m) {
    SimplicityReport rep;
    std::map<Arc, long long> mult;
    for (const auto& [u, v] : m.arcs) {
        if (u == v)
            ++rep.loops;
        else
            ++mult[{u, v}];
    }
    for (const auto& [arc, count] : mult) {
        rep.parallel_arcs += count - 1;
        if (arc.first < arc.second && mult.count({arc.second, arc.first})) ++rep.digons;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Uniform regular digraphs by rejection.

enum class RegularMode { multi, simple, oriented };

inline const char* to_string(RegularMode m) {
    switch (m) {
        case RegularMode::multi: return "multi";
        case RegularMode::simple: return "simple";
        case RegularMode::oriented: return "oriented";
    }
    return "?";
}

class rejection_error : public std::runtime_error {
public:
    rejection_error(long long tries)
        : std::runtime_error("rejection sampling failed after " + std::to_string(tries) +
                             " tries (acceptance rate below 1/tries)"),
          tries_(tries) {}
    long long tries() const { return tries_; }

private:
    long long tries_;
};

struct RegularSample {
    MultiDigraph graph;
    long long tries = 0;  // configurations drawn, including the accepted one

    // For modes simple and oriented the sample converts losslessly.
    Digraph digraph() const { return to_digraph(graph); }
};

// Uniform over the stated class: every multidigraph outcome of the pairing
// with a given arc multiset is equally likely, so conditioning on the class
// by rejection keeps the distribution uniform. Acceptance for mode oriented
// approaches e^{-mu1-mu2} (see orientedness_probability), which decays fast
// in r; callers at larger r should use mode multi.
inline RegularSample sample_regular(int n, int r, RegularMode mode, std::uint64_t seed,
                                    long long max_tries = 1'000'000) {
    if (n < 1 || r < 1) throw std::invalid_argument("need n >= 1 and r >= 1");
    if (mode == RegularMode::oriented && n < 2 * r + 1)
        throw std::invalid_argument("oriented r-regular digraphs need n >= 2r+1");
    if (mode == RegularMode::simple && n < r + 1)
        throw std::invalid_argument("simple r-regular digraphs need n >= r+1");
    for (long long t = 0; t < max_tries; ++t) {
        auto cp = sample_directed_configuration(n, r, substream(seed, static_cast<std::uint64_t>(t)));
        MultiDigraph m = cp.to_multidigraph();
        SimplicityReport rep = classify(m);
        bool ok = mode == RegularMode::multi || (mode == RegularMode::simple && rep.simple()) ||
                  (mode == RegularMode::oriented && rep.oriented());
        if (ok) return {std::move(m), t + 1};
    }
    throw rejection_error(max_tries);
}

// Limit probability that the directed configuration model yields an oriented
// graph: e^{-mu1-mu2} with mu_i = ((2r-1)^i + 1) / (2i).
inline double orientedness_probability(int r) {
    if (r < 1) throw std::invalid_argument("need r >= 1");
    double mu1 = (std::pow(2.0 * r - 1.0, 1) + 1.0) / 2.0;
    double mu2 = (std::pow(2.0 * r - 1.0, 2) + 1.0) / 4.0;
    return std::exp(-mu1 - mu2);
}

// ---------------------------------------------------------------------------
// Binomial oriented model and tournaments.

// Each unordered pair independently carries an edge with probability 2p,
// oriented fair; one uniform draw per pair decides both.
inline Digraph sample_binomial_oriented(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (!(p >= 0.0) || 2.0 * p > 1.0)
        throw std::invalid_argument("need 0 <= 2p <= 1");
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double x = rng.next_double();
            if (x < 2.0 * p) arcs.emplace_back(x < p ? Arc{u, v} : Arc{v, u});
        }
    return Digraph::from_arcs(n, arcs);
}

inline Digraph random_tournament(int n, std::uint64_t seed) {
    return sample_binomial_oriented(n, 0.5, seed);
}

// ---------------------------------------------------------------------------
// Layered tournament: ceil(n/s) blocks of nearly equal size (all at most s),
// random tournament inside each block, all arcs forward across blocks. Every
// directed cycle lies inside a block, so the circumference is at most s.
// With verify_blocks each block is resampled until its exact maximum acyclic
// set is smaller than 2*log2(s) + 2.

inline std::vector<int> layered_block_sizes(int n, int s) {
    if (s < 1 || s > n) throw std::invalid_argument("need 1 <= s <= n");
    int q = (n + s - 1) / s;
    int base = n / q, extra = n % q;
    std::vector<int> sizes(q, base);
    for (int i = 0; i < extra; ++i) ++sizes[i];
    return sizes;
}

inline Digraph layered_tournament(int n, int s, std::uint64_t seed, bool verify_blocks = false,
                                  int max_retries = 500, long long alpha_budget = kDefaultNodeBudget) {
    auto sizes = layered_block_sizes(n, s);
    if (verify_blocks && s > 24)
        throw std::invalid_argument("verify_blocks needs s <= 24 for the exact oracle");
    const double alpha_cap = 2.0 * std::log2(static_cast<double>(s)) + 2.0;

    std::vector<Arc> arcs;
    int offset = 0;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        int size = sizes[b];
        Digraph block(0);
        bool ok = false;
        for (int retry = 0; retry < max_retries && !ok; ++retry) {
            block = random_tournament(size, substream(seed, b * 1000003ULL + retry));
            if (!verify_blocks) {
                ok = true;
            } else {
                VertexSet alpha = max_acyclic_set(block, alpha_budget);
                ok = static_cast<double>(alpha.size()) < alpha_cap;
            }
        }
        if (!ok) throw rejection_error(max_retries);
        for (const auto& [u, v] : block.arcs()) arcs.emplace_back(offset + u, offset + v);
        // All arcs point from earlier blocks to later blocks.
        for (int u = 0; u < size; ++u)
            for (int w = offset + size; w < n; ++w) arcs.emplace_back(offset + u, w);
        offset += size;
    }
    return Digraph::from_arcs(n, arcs);
}

// ---------------------------------------------------------------------------
// Blow-ups of a directed cycle.

// Blow-up of the directed k-cycle with the given block sizes: independent
// blocks, complete forward arcs from block i to block i+1 (mod k). Every
// cycle meets every block, so cycle lengths are multiples of k and the
// maximum acyclic set drops exactly one whole block (the smallest).
inline Digraph cycle_blowup(int k, const std::vector<int>& block_sizes) {
    if (k < 2 || static_cast<int>(block_sizes.size()) != k)
        throw std::invalid_argument("need k >= 2 block sizes");
    std::vector<int> offset(k + 1, 0);
    for (int i = 0; i < k; ++i) {
        if (block_sizes[i] < 1) throw std::invalid_argument("blocks must be nonempty");
        offset[i + 1] = offset[i] + block_sizes[i];
    }
    const int n = offset[k];
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        for (int a = offset[i]; a < offset[i + 1]; ++a)
            for (int b = offset[j]; b < offset[j + 1]; ++b) arcs.emplace_back(a, b);
    }
    return Digraph::from_arcs(n, arcs);
}

// The blow-up witnessing that cycle lengths 0 mod k do not cap the list
// dichromatic number: c = k(t-1)+1, blocks of size C(c, t), and inside each
// block the lists run over all t-subsets of {1..c}. The instance is not
// L-colorable for its own list assignment.
struct BlowupInstance {
    Digraph digraph;
    ListAssignment lists;
    int k = 0, t = 0, c = 0;
};

inline BlowupInstance modular_blowup(int k, int t) {
    if (k < 3 || t < 1) throw std::invalid_argument("need k >= 3 and t >= 1");
    const int c = k * (t - 1) + 1;
    // Block size C(c, t), guarded against overflow and absurd sizes.
    long long block = 1;
    for (int i = 1; i <= t; ++i) {
        block = block * (c - t + i) / i;
        if (block > 2'000'000) throw std::overflow_error("blow-up block size too large");
    }
    if (block * k > 2'000'000) throw std::overflow_error("blow-up too large");

    BlowupInstance inst;
    inst.k = k;
    inst.t = t;
    inst.c = c;
    std::vector<int> sizes(k, static_cast<int>(block));
    inst.digraph = cycle_blowup(k, sizes);

    // Lexicographically enumerate the t-subsets of {1..c}; each block carries
    // each subset exactly once.
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur(t);
    for (int i = 0; i < t; ++i) cur[i] = i + 1;
    for (;;) {
        subsets.push_back(cur);
        int i = t - 1;
        while (i >= 0 && cur[i] == c - (t - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < t; ++j) cur[j] = cur[j - 1] + 1;
    }
    inst.lists.lists.resize(inst.digraph.vertex_count());
    for (int b = 0; b < k; ++b)
        for (long long s = 0; s < block; ++s)
            inst.lists.lists[b * block + s] = subsets[static_cast<std::size_t>(s)];
    return inst;
}

// Quadratic-residue tournament on 7 vertices (i -> i+s mod 7, s in {1,2,4});
// its maximum acyclic set has size 3.
inline Digraph paley7() {
    std::vector<Arc> arcs;
    for (int i = 0; i < 7; ++i)
        for (int s : {1, 2, 4}) arcs.emplace_back(i, (i + s) % 7);
    return Digraph::from_arcs(7, arcs);
}

// ---------------------------------------------------------------------------
// Eulerian orientations (the multidigraph is read as an undirected multigraph
// by forgetting arc directions).

// Number of labelled Eulerian orientations: non-loop edge copies are oriented
// individually (so parallel copies count orientations per copy), and every
// loop contributes a factor 2. Brute force, guarded by edge count.
inline long long count_eulerian_orientations(const MultiDigraph& g, int max_edges = 22) {
    std::vector<Arc> edges;
    long long loop_factor = 1;
    for (const auto& [u, v] : g.arcs) {
        if (u == v)
            loop_factor *= 2;
        else
            edges.emplace_back(u, v);
    }
    const int m = static_cast<int>(edges.size());
    if (m > max_edges)
        throw std::invalid_argument("too many edges for brute-force orientation counting");
    long long count = 0;
    std::vector<int> net(g.n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::fill(net.begin(), net.end(), 0);
        for (int i = 0; i < m; ++i) {
            // Bit set: keep u -> v; clear: reverse.
            int from = (mask >> i) & 1 ? edges[i].first : edges[i].second;
            int to = (mask >> i) & 1 ? edges[i].second : edges[i].first;
            ++net[from];
            --net[to];
        }
        bool balanced = true;
        for (int v = 0; v < g.n && balanced; ++v) balanced = net[v] == 0;
        if (balanced) ++count;
    }
    return count * loop_factor;
}

// Expected number of labelled Eulerian orientations of the undirected
// configuration multigraph with parameters (n, 2r):
// 2^{nr} * C(2r, r)^n / C(2nr, nr).
inline double expected_eulerian_orientations(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("need n >= 1 and r >= 1");
    auto log_binom = [](int a, int b) {
        return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
    };
    double log_val = n * r * std::log(2.0) + n * log_binom(2 * r, r) - log_binom(2 * n * r, n * r);
    return std::exp(log_val);
}

}  // namespace dichroma
