#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "dichroma/generators.hpp"
#include "dichroma/heuristics.hpp"

// Monte Carlo harness. Every record is recomputable from (kind, n, r or p,
// seed) alone; per-sample seeds are derived by index, never by execution
// order, so cells and samples can run concurrently and identical configs
// produce byte-identical CSV output.
//
// Seed plan: cell_seed = substream(master_seed, cell_index);
//            sample_seed = substream(cell_seed, sample_index);
// inside one sample, independent draws use substream(sample_seed, 0), 1, ...

namespace dichroma {

enum class ExperimentKind {
    orientedness,
    greedy_scaling,
    r1_cycles,
    abk_probe,
    upper_bound_consistency,
};

inline const char* to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::orientedness: return "orientedness";
        case ExperimentKind::greedy_scaling: return "greedy-scaling";
        case ExperimentKind::r1_cycles: return "r1-cycles";
        case ExperimentKind::abk_probe: return "abk-probe";
        case ExperimentKind::upper_bound_consistency: return "upper-bound-consistency";
    }
    return "?";
}

inline ExperimentKind parse_experiment_kind(const std::string& s) {
    if (s == "orientedness") return ExperimentKind::orientedness;
    if (s == "greedy-scaling") return ExperimentKind::greedy_scaling;
    if (s == "r1-cycles") return ExperimentKind::r1_cycles;
    if (s == "abk-probe" || s == "abk") return ExperimentKind::abk_probe;
    if (s == "upper-bound-consistency" || s == "upper-consistency")
        return ExperimentKind::upper_bound_consistency;
    throw std::invalid_argument("unknown experiment kind: " + s);
}

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::orientedness;
    std::vector<int> n_grid;
    std::vector<int> r_grid;     // r-parameterized kinds
    std::vector<double> p_grid;  // the binomial cells of the abk probe
    int samples = 0;
    std::uint64_t master_seed = 0;
    long long oracle_budget = kDefaultNodeBudget;
};

// One observation. r < 0 or p < 0 marks the field unused (empty CSV column).
struct ExperimentRecord {
    ExperimentKind kind;
    int n = 0;
    int r = -1;
    double p = -1.0;
    int sample = 0;
    std::uint64_t seed = 0;
    std::string stat;
    double value = 0.0;

    bool operator==(const ExperimentRecord&) const = default;
};

// Per-(cell, statistic) aggregate. `reference` is the theory value the cell is
// compared against (NaN if none); half_width is the z=3 normal-approximation
// band where one applies; `violations` counts samples breaking the cell's
// stated bound. Tolerances are engineering choices, not paper guarantees: the
// references are asymptotic and carry no finite-n error bounds.
struct CellSummary {
    ExperimentKind kind;
    int n = 0;
    int r = -1;
    double p = -1.0;
    std::string stat;
    long long count = 0;
    double min = 0.0, max = 0.0, mean = 0.0, stddev = 0.0;
    double reference = std::numeric_limits<double>::quiet_NaN();
    double half_width = std::numeric_limits<double>::quiet_NaN();
    long long violations = 0;
    std::string note;
};

struct ExperimentResult {
    std::vector<ExperimentRecord> records;
    std::vector<CellSummary> summaries;
};

// ---------------------------------------------------------------------------
// Parallel plumbing. DICHROMA_THREADS caps the worker count.

inline int thread_cap() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("DICHROMA_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 256);
    }
    return hw;
}

namespace detail {

template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    int threads = std::min(thread_cap(), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (int i = t; i < count; i += threads) fn(i);
        });
    for (auto& th : pool) th.join();
}

inline CellSummary summarize(ExperimentKind kind, int n, int r, double p, const std::string& stat,
                             const std::vector<double>& values) {
    CellSummary s;
    s.kind = kind;
    s.n = n;
    s.r = r;
    s.p = p;
    s.stat = stat;
    s.count = static_cast<long long>(values.size());
    if (values.empty()) return s;
    s.min = s.max = values[0];
    double sum = 0;
    for (double v : values) {
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
        sum += v;
    }
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Runners.

// Fraction of configuration samples that collapse to an oriented graph,
// against the limit e^{-mu1-mu2}.
inline ExperimentResult run_orientedness(const ExperimentConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("need samples >= 1");
    if (cfg.n_grid.empty() || cfg.r_grid.empty())
        throw std::invalid_argument("orientedness needs n and r grids");
    ExperimentResult out;
    std::uint64_t cell_index = 0;
    for (int n : cfg.n_grid)
        for (int r : cfg.r_grid) {
            std::uint64_t cell_seed = substream(cfg.master_seed, cell_index++);
            std::vector<ExperimentRecord> slots(cfg.samples);
            detail::parallel_for(cfg.samples, [&](int i) {
                std::uint64_t seed = substream(cell_seed, static_cast<std::uint64_t>(i));
                auto cp = sample_directed_configuration(n, r, substream(seed, 0));
                bool oriented = classify(cp.to_multidigraph()).oriented();
                slots[i] = {cfg.kind, n, r, -1.0, i, seed, "oriented", oriented ? 1.0 : 0.0};
            });
            std::vector<double> vals(cfg.samples);
            for (int i = 0; i < cfg.samples; ++i) vals[i] = slots[i].value;
            auto s = detail::summarize(cfg.kind, n, r, -1.0, "oriented_fraction", vals);
            s.reference = orientedness_probability(r);
            s.half_width = 3.0 * std::sqrt(std::max(s.mean * (1.0 - s.mean), 1e-12) /
                                           static_cast<double>(cfg.samples));
            s.note = "reference is the n->infinity limit";
            out.summaries.push_back(s);
            out.records.insert(out.records.end(), slots.begin(), slots.end());
        }
    return out;
}

// Greedy acyclic sets on configuration multidigraphs (no rejection: oriented
// rejection is hopeless already at r=4, and the scaling bounds hold for the
// multidigraph model directly). Random processing order per sample.
inline ExperimentResult run_greedy_scaling(const ExperimentConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("need samples >= 1");
    if (cfg.n_grid.empty() || cfg.r_grid.empty())
        throw std::invalid_argument("greedy-scaling needs n and r grids");
    ExperimentResult out;
    std::uint64_t cell_index = 0;
    for (int n : cfg.n_grid)
        for (int r : cfg.r_grid) {
            std::uint64_t cell_seed = substream(cfg.master_seed, cell_index++);
            std::vector<std::vector<ExperimentRecord>> slots(cfg.samples);
            detail::parallel_for(cfg.samples, [&](int i) {
                std::uint64_t seed = substream(cell_seed, static_cast<std::uint64_t>(i));
                auto cp = sample_directed_configuration(n, r, substream(seed, 0));
                MultiDigraph m = cp.to_multidigraph();
                Rng order_rng(substream(seed, 1));
                auto trace = greedy_acyclic(m, order_rng.permutation(n));
                double size = static_cast<double>(trace.accepted.size());
                slots[i].push_back({cfg.kind, n, r, -1.0, i, seed, "greedy_size", size});
                if (r >= 2)
                    slots[i].push_back({cfg.kind, n, r, -1.0, i, seed, "normalized_ratio",
                                        size * r / (n * std::log(static_cast<double>(r)))});
            });
            std::vector<double> sizes, ratios;
            for (const auto& recs : slots)
                for (const auto& rec : recs) {
                    out.records.push_back(rec);
                    if (rec.stat == "greedy_size") sizes.push_back(rec.value);
                    if (rec.stat == "normalized_ratio") ratios.push_back(rec.value);
                }
            const double floor_bound = n * std::log2(r + 1.0) / (5.0 * r);
            const double upper_bound = (2.0 * std::log(static_cast<double>(r)) + 4.0) * n / r;
            auto s = detail::summarize(cfg.kind, n, r, -1.0, "greedy_size", sizes);
            s.reference = floor_bound;
            for (double v : sizes)
                if (v < floor_bound) ++s.violations;
            s.note = "violations count samples below the wvhp floor";
            out.summaries.push_back(s);
            auto u = detail::summarize(cfg.kind, n, r, -1.0, "greedy_upper", sizes);
            u.reference = upper_bound;
            for (double v : sizes)
                if (v > upper_bound) ++u.violations;
            u.note = "violations count samples above the alpha upper bound (greedy <= alpha)";
            out.summaries.push_back(u);
            if (!ratios.empty()) {
                auto q = detail::summarize(cfg.kind, n, r, -1.0, "normalized_ratio", ratios);
                q.note = "|A| r / (n ln r)";
                out.summaries.push_back(q);
            }
        }
    return out;
}

// Permutation digraphs (r = 1): cycle counts against H_n, and the exact
// identity alpha = n - #cycles at oracle sizes.
inline ExperimentResult run_r1_cycle_count(const ExperimentConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("need samples >= 1");
    if (cfg.n_grid.empty()) throw std::invalid_argument("r1-cycles needs an n grid");
    ExperimentResult out;
    std::uint64_t cell_index = 0;
    for (int n : cfg.n_grid) {
        std::uint64_t cell_seed = substream(cfg.master_seed, cell_index++);
        std::vector<std::vector<ExperimentRecord>> slots(cfg.samples);
        detail::parallel_for(cfg.samples, [&](int i) {
            std::uint64_t seed = substream(cell_seed, static_cast<std::uint64_t>(i));
            auto cp = sample_directed_configuration(n, 1, substream(seed, 0));
            // Cycle decomposition of the pairing permutation; loops and
            // digons are length-1 and length-2 cycles.
            std::vector<char> visited(n, 0);
            int cycles = 0;
            for (int v = 0; v < n; ++v) {
                if (visited[v]) continue;
                ++cycles;
                for (int u = v; !visited[u]; u = cp.pairing[u]) visited[u] = 1;
            }
            slots[i].push_back({cfg.kind, n, 1, -1.0, i, seed, "cycle_count",
                                static_cast<double>(cycles)});
            if (n <= 15) {
                // Strip loop vertices; the rest is a disjoint union of cycles.
                VertexSet keep;
                for (int v = 0; v < n; ++v)
                    if (cp.pairing[v] != v) keep.push_back(v);
                std::vector<Arc> arcs;
                std::vector<int> local(n, -1);
                for (std::size_t j = 0; j < keep.size(); ++j) local[keep[j]] = static_cast<int>(j);
                for (int v : keep) arcs.emplace_back(local[v], local[cp.pairing[v]]);
                Digraph d = Digraph::from_arcs(static_cast<int>(keep.size()), arcs);
                int alpha = static_cast<int>(max_acyclic_set(d, cfg.oracle_budget).size());
                slots[i].push_back({cfg.kind, n, 1, -1.0, i, seed, "alpha_identity",
                                    alpha == n - cycles ? 1.0 : 0.0});
            }
        });
        std::vector<double> counts, identities;
        for (const auto& recs : slots)
            for (const auto& rec : recs) {
                out.records.push_back(rec);
                if (rec.stat == "cycle_count") counts.push_back(rec.value);
                if (rec.stat == "alpha_identity") identities.push_back(rec.value);
            }
        auto s = detail::summarize(cfg.kind, n, 1, -1.0, "cycle_count", counts);
        double harmonic = 0;
        for (int i = 1; i <= n; ++i) harmonic += 1.0 / i;
        s.reference = harmonic;
        s.note = "reference H_n";
        out.summaries.push_back(s);
        if (!identities.empty()) {
            auto id = detail::summarize(cfg.kind, n, 1, -1.0, "alpha_identity", identities);
            id.reference = 1.0;
            for (double v : identities)
                if (v != 1.0) ++id.violations;
            id.note = "exact alpha = n - #cycles";
            out.summaries.push_back(id);
        }
    }
    return out;
}

// Ratio of the greedy acyclic set to the conjectured (n^2/m) log2(m/n) floor.
// A probe: values are recorded, nothing passes or fails.
inline ExperimentResult run_abk_probe(const ExperimentConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("need samples >= 1");
    if (cfg.n_grid.empty() || (cfg.r_grid.empty() && cfg.p_grid.empty()))
        throw std::invalid_argument("abk-probe needs an n grid and an r or p grid");
    ExperimentResult out;
    std::uint64_t cell_index = 0;
    auto run_cell = [&](int n, int r, double p) {
        std::uint64_t cell_seed = substream(cfg.master_seed, cell_index++);
        if (r == 1) {
            CellSummary s;
            s.kind = cfg.kind;
            s.n = n;
            s.r = r;
            s.stat = "abk_ratio";
            s.note = "skipped: log2(m/n) = 0 at r = 1";
            out.summaries.push_back(s);
            return;
        }
        std::vector<std::vector<ExperimentRecord>> slots(cfg.samples);
        detail::parallel_for(cfg.samples, [&](int i) {
            std::uint64_t seed = substream(cell_seed, static_cast<std::uint64_t>(i));
            Rng order_rng(substream(seed, 1));
            long long m = 0;
            double greedy_size = 0;
            if (r >= 0) {
                auto cp = sample_directed_configuration(n, r, substream(seed, 0));
                MultiDigraph mult = cp.to_multidigraph();
                m = mult.arc_count();
                greedy_size = static_cast<double>(
                    greedy_acyclic(mult, order_rng.permutation(n)).accepted.size());
            } else {
                Digraph d = sample_binomial_oriented(n, p, substream(seed, 0));
                m = d.arc_count();
                greedy_size = static_cast<double>(
                    greedy_acyclic(d, order_rng.permutation(n)).accepted.size());
            }
            if (m <= n) return;  // log2(m/n) <= 0: skip, noted in the summary
            double denom = (static_cast<double>(n) * n / m) * std::log2(static_cast<double>(m) / n);
            slots[i].push_back({cfg.kind, n, r, p, i, seed, "abk_ratio", greedy_size / denom});
        });
        std::vector<double> ratios;
        long long skipped = 0;
        for (const auto& recs : slots) {
            if (recs.empty()) ++skipped;
            for (const auto& rec : recs) {
                out.records.push_back(rec);
                ratios.push_back(rec.value);
            }
        }
        auto s = detail::summarize(cfg.kind, n, r, p, "abk_ratio", ratios);
        s.note = r >= 0 ? "denominator reduces to (n/r) log2 r for r-regular inputs"
                        : "binomial model";
        if (skipped > 0) s.note += "; skipped " + std::to_string(skipped) + " samples with m <= n";
        out.summaries.push_back(s);
    };
    for (int n : cfg.n_grid) {
        for (int r : cfg.r_grid) run_cell(n, r, -1.0);
        for (double p : cfg.p_grid) run_cell(n, -1, p);
    }
    return out;
}

// Exact alpha/n distribution on uniformly random r-regular oriented graphs
// (rejection; feasible for the small r and n this targets). Descriptive: the
// 99/100 reference is asymptotic, so the distribution is published without a
// hard pass/fail.
inline ExperimentResult run_upper_bound_consistency(const ExperimentConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("need samples >= 1");
    ExperimentResult out;
    std::uint64_t cell_index = 0;
    for (int n : cfg.n_grid)
        for (int r : cfg.r_grid) {
            std::uint64_t cell_seed = substream(cfg.master_seed, cell_index++);
            std::vector<ExperimentRecord> slots(cfg.samples);
            detail::parallel_for(cfg.samples, [&](int i) {
                std::uint64_t seed = substream(cell_seed, static_cast<std::uint64_t>(i));
                auto sample = sample_regular(n, r, RegularMode::oriented, substream(seed, 0));
                Digraph d = sample.digraph();
                int alpha = static_cast<int>(max_acyclic_set(d, cfg.oracle_budget).size());
                slots[i] = {cfg.kind, n, r, -1.0, i, seed, "alpha_over_n",
                            static_cast<double>(alpha) / n};
            });
            std::vector<double> vals(cfg.samples);
            for (int i = 0; i < cfg.samples; ++i) {
                out.records.push_back(slots[i]);
                vals[i] = slots[i].value;
            }
            auto s = detail::summarize(cfg.kind, n, r, -1.0, "alpha_over_n", vals);
            s.reference = 0.99;
            for (double v : vals)
                if (v > 0.99) ++s.violations;
            s.note = "descriptive; the 99/100 bound is asymptotic (r >= 2)";
            out.summaries.push_back(s);
        }
    return out;
}

inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    switch (cfg.kind) {
        case ExperimentKind::orientedness: return run_orientedness(cfg);
        case ExperimentKind::greedy_scaling: return run_greedy_scaling(cfg);
        case ExperimentKind::r1_cycles: return run_r1_cycle_count(cfg);
        case ExperimentKind::abk_probe: return run_abk_probe(cfg);
        case ExperimentKind::upper_bound_consistency: return run_upper_bound_consistency(cfg);
    }
    throw std::invalid_argument("unknown experiment kind");
}

// ---------------------------------------------------------------------------
// Output. CSV schema: kind,n,r,p,sample,seed,stat,value with floating values
// at 9 significant digits, LF line endings, empty fields for unused r/p.

inline std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

inline void write_csv(std::ostream& os, const std::vector<ExperimentRecord>& records) {
    os << "kind,n,r,p,sample,seed,stat,value\n";
    for (const auto& rec : records) {
        os << to_string(rec.kind) << ',' << rec.n << ',';
        if (rec.r >= 0) os << rec.r;
        os << ',';
        if (rec.p >= 0) os << format_value(rec.p);
        os << ',' << rec.sample << ',' << rec.seed << ',' << rec.stat << ','
           << format_value(rec.value) << '\n';
    }
}

inline void write_summaries(std::ostream& os, const std::vector<CellSummary>& summaries) {
    for (const auto& s : summaries) {
        os << "summary kind=" << to_string(s.kind) << " n=" << s.n;
        if (s.r >= 0) os << " r=" << s.r;
        if (s.p >= 0) os << " p=" << format_value(s.p);
        os << " stat=" << s.stat << " count=" << s.count;
        if (s.count > 0)
            os << " min=" << format_value(s.min) << " max=" << format_value(s.max)
               << " mean=" << format_value(s.mean) << " stddev=" << format_value(s.stddev);
        if (!std::isnan(s.reference)) os << " reference=" << format_value(s.reference);
        if (!std::isnan(s.half_width)) os << " half_width=" << format_value(s.half_width);
        os << " violations=" << s.violations;
        if (!s.note.empty()) os << " note=\"" << s.note << '"';
        os << '\n';
    }
}

}  // namespace dichroma
