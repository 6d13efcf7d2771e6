// Command-line front end: generators, solvers, colorings and the Monte Carlo
// harness, glued to the text formats. Machine-first output: one token line on
// stdout per decision, details behind --verbose. Exit codes: 0 success,
// 1 invalid input, 2 budget exhausted / unknown, 64 usage errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dichroma/cyclic_order.hpp"
#include "dichroma/degeneracy.hpp"
#include "dichroma/exact.hpp"
#include "dichroma/experiments.hpp"
#include "dichroma/generators.hpp"
#include "dichroma/heuristics.hpp"

namespace {

using namespace dichroma;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

bool g_verbose = false;

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return is;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    return os;
}

Digraph load_digraph(const std::string& path) {
    auto is = open_in(path);
    return read_digraph(is);
}

MultiDigraph load_multidigraph(const std::string& path) {
    auto is = open_in(path);
    return read_multidigraph(is);
}

ListAssignment load_lists(const std::string& path) {
    auto is = open_in(path);
    return read_lists(is);
}

void save_digraph(const std::string& path, const Digraph& d) {
    auto os = open_out(path);
    write_digraph(os, d);
    if (g_verbose) std::cerr << "wrote " << path << "\n";
}

void save_coloring(const std::string& path, const Coloring& col) {
    auto os = open_out(path);
    os << "COLORING " << col.color.size() << '\n';
    for (std::size_t v = 0; v < col.color.size(); ++v) os << v << ' ' << col.color[v] << '\n';
}

void print_coloring_verbose(const Digraph& d, const Coloring& col) {
    if (!g_verbose) return;
    std::cerr << "colors:";
    for (int v = 0; v < d.vertex_count(); ++v) std::cerr << ' ' << v << ':' << col.color[v];
    std::cerr << "\n";
}

struct Options {
    std::string in, out, lists;
    std::uint64_t seed = 0;
    long long budget = kDefaultNodeBudget;
    std::string format = "text";
};

void add_common(CLI::App* cmd, Options& opt, bool with_seed = false) {
    if (with_seed) cmd->add_option("--seed", opt.seed, "master seed");
    cmd->add_option("--budget", opt.budget, "search node budget");
    cmd->add_option("--format", opt.format, "i/o format (only: text)")
        ->check(CLI::IsMember({"text"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digraph acyclic-set and dichromatic-number toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--verbose", g_verbose, "human-readable details on stderr");
    app.set_help_all_flag("--help-all");

    Options opt;
    int exit_code = kExitOk;
    std::vector<std::function<void()>> actions;
    auto run = [&](CLI::App* cmd, std::function<void()> fn) {
        cmd->callback([fn = std::move(fn)]() { fn(); });
    };

    // ------------------------------------------------------------------ gen
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);

    {
        auto* c = gen->add_subcommand("config-model", "directed configuration multidigraph");
        auto n = std::make_shared<int>(1);
        auto r = std::make_shared<int>(1);
        c->add_option("--n", *n, "vertices")->required();
        c->add_option("--r", *r, "degree")->required();
        c->add_option("--out", opt.out, "output path")->required();
        add_common(c, opt, true);
        run(c, [&, n, r] {
            auto cp = sample_directed_configuration(*n, *r, opt.seed);
            auto os = open_out(opt.out);
            write_multidigraph(os, cp.to_multidigraph());
        });
    }
    {
        auto* c = gen->add_subcommand("regular", "uniform regular digraph by rejection");
        auto n = std::make_shared<int>(1);
        auto r = std::make_shared<int>(1);
        auto mode = std::make_shared<std::string>("oriented");
        auto tries = std::make_shared<long long>(1'000'000);
        c->add_option("--n", *n)->required();
        c->add_option("--r", *r)->required();
        c->add_option("--mode", *mode)->check(CLI::IsMember({"multi", "simple", "oriented"}));
        c->add_option("--max-tries", *tries);
        c->add_option("--out", opt.out)->required();
        add_common(c, opt, true);
        run(c, [&, n, r, mode, tries] {
            RegularMode m = *mode == "multi"    ? RegularMode::multi
                            : *mode == "simple" ? RegularMode::simple
                                                : RegularMode::oriented;
            auto res = sample_regular(*n, *r, m, opt.seed, *tries);
            auto os = open_out(opt.out);
            if (m == RegularMode::multi)
                write_multidigraph(os, res.graph);
            else
                write_digraph(os, res.digraph());
            if (g_verbose) std::cerr << "accepted after " << res.tries << " tries\n";
        });
    }
    {
        auto* c = gen->add_subcommand("binomial", "binomial oriented model");
        auto n = std::make_shared<int>(1);
        auto p = std::make_shared<double>(0.0);
        c->add_option("--n", *n)->required();
        c->add_option("--p", *p)->required();
        c->add_option("--out", opt.out)->required();
        add_common(c, opt, true);
        run(c, [&, n, p] { save_digraph(opt.out, sample_binomial_oriented(*n, *p, opt.seed)); });
    }
    {
        auto* c = gen->add_subcommand("tournament", "uniform random tournament");
        auto n = std::make_shared<int>(1);
        c->add_option("--n", *n)->required();
        c->add_option("--out", opt.out)->required();
        add_common(c, opt, true);
        run(c, [&, n] { save_digraph(opt.out, random_tournament(*n, opt.seed)); });
    }
    {
        auto* c = gen->add_subcommand("layered", "layered tournament with bounded circumference");
        auto n = std::make_shared<int>(1);
        auto s = std::make_shared<int>(1);
        auto verify = std::make_shared<bool>(false);
        c->add_option("--n", *n)->required();
        c->add_option("--s", *s, "block size cap = circumference cap")->required();
        c->add_flag("--verify-blocks", *verify, "resample blocks until alpha < 2 log2 s + 2");
        c->add_option("--out", opt.out)->required();
        add_common(c, opt, true);
        run(c, [&, n, s, verify] {
            save_digraph(opt.out, layered_tournament(*n, *s, opt.seed, *verify, 500, opt.budget));
        });
    }
    {
        auto* c = gen->add_subcommand("blowup", "modular blow-up with its list assignment");
        auto k = std::make_shared<int>(3);
        auto t = std::make_shared<int>(1);
        c->add_option("--k", *k, "cycle length modulus")->required();
        c->add_option("--t", *t, "list size")->required();
        c->add_option("--out", opt.out, "digraph path")->required();
        c->add_option("--lists", opt.lists, "list assignment path")->required();
        add_common(c, opt);
        run(c, [&, k, t] {
            auto inst = modular_blowup(*k, *t);
            save_digraph(opt.out, inst.digraph);
            auto os = open_out(opt.lists);
            write_lists(os, inst.lists);
        });
    }
    {
        auto* c = gen->add_subcommand("fixture", "named fixture instances");
        auto name = std::make_shared<std::string>("paley7");
        c->add_option("--name", *name)->check(CLI::IsMember({"paley7"}));
        c->add_option("--out", opt.out)->required();
        add_common(c, opt);
        run(c, [&, name] { save_digraph(opt.out, paley7()); });
    }

    // ---------------------------------------------------------------- solve
    auto* solve = app.add_subcommand("solve", "exact solvers");
    solve->require_subcommand(1);
    {
        auto* c = solve->add_subcommand("alpha", "maximum acyclic set size");
        c->add_option("--in", opt.in)->required();
        add_common(c, opt);
        run(c, [&] {
            Digraph d = load_digraph(opt.in);
            try {
                VertexSet s = max_acyclic_set(d, opt.budget);
                std::cout << s.size() << "\n";
                if (g_verbose) {
                    std::cerr << "set:";
                    for (int v : s) std::cerr << ' ' << v;
                    std::cerr << "\n";
                }
            } catch (const alpha_budget_error& e) {
                std::cout << "UNKNOWN " << e.best() << "\n";
                exit_code = kExitUnknown;
            }
        });
    }
    {
        auto* c = solve->add_subcommand("chi", "dichromatic number");
        c->add_option("--in", opt.in)->required();
        c->add_option("--out", opt.out, "write the witness coloring");
        add_common(c, opt);
        run(c, [&] {
            Digraph d = load_digraph(opt.in);
            try {
                auto res = dichromatic_number(d, opt.budget);
                std::cout << res.k << "\n";
                print_coloring_verbose(d, res.coloring);
                if (!opt.out.empty()) save_coloring(opt.out, res.coloring);
            } catch (const chi_budget_error& e) {
                std::cout << "UNKNOWN " << e.best() << "\n";
                exit_code = kExitUnknown;
            }
        });
    }
    {
        auto* c = solve->add_subcommand("listcheck", "L-colorability for given lists");
        c->add_option("--in", opt.in)->required();
        c->add_option("--lists", opt.lists)->required();
        c->add_option("--out", opt.out, "write the coloring if one exists");
        add_common(c, opt);
        run(c, [&] {
            Digraph d = load_digraph(opt.in);
            ListAssignment l = load_lists(opt.lists);
            auto res = is_list_colorable(d, l, opt.budget);
            if (res.verdict == Verdict::colorable) {
                std::cout << "COLORABLE\n";
                print_coloring_verbose(d, *res.coloring);
                if (!opt.out.empty()) save_coloring(opt.out, *res.coloring);
            } else if (res.verdict == Verdict::not_colorable) {
                std::cout << "NOT L-COLORABLE\n";
            } else {
                std::cout << "UNKNOWN\n";
                exit_code = kExitUnknown;
            }
        });
    }

    // ---------------------------------------------------------------- color
    auto* color = app.add_subcommand("color", "polynomial-time colorings");
    color->require_subcommand(1);
    {
        auto* c = color->add_subcommand("degeneracy", "peel order + list coloring");
        auto k = std::make_shared<int>(-1);
        c->add_option("--in", opt.in)->required();
        c->add_option("--k", *k, "degeneracy parameter; default |cycle length set|");
        c->add_option("--lists", opt.lists, "list assignment; default {1..k+1} everywhere");
        c->add_option("--out", opt.out, "write the coloring");
        add_common(c, opt);
        run(c, [&, k] {
            Digraph d = load_digraph(opt.in);
            int kk = *k >= 0 ? *k : static_cast<int>(cycle_length_set(d, opt.budget).size());
            auto ord = degeneracy_order(d, kk);
            ListAssignment l;
            if (!opt.lists.empty()) {
                l = load_lists(opt.lists);
            } else {
                std::vector<int> palette(kk + 1);
                for (int c2 = 0; c2 <= kk; ++c2) palette[c2] = c2 + 1;
                l = ListAssignment::uniform(d.vertex_count(), palette);
            }
            Coloring col = color_from_degeneracy(d, ord, l);
            bool valid = is_valid_coloring(d, col);
            std::cout << "COLORS " << color_count(col) << (valid ? " VALID" : " INVALID") << "\n";
            print_coloring_verbose(d, col);
            if (!opt.out.empty()) save_coloring(opt.out, col);
        });
    }
    {
        auto* c = color->add_subcommand("short-cycles", "ceil(s/(g-1)) coloring");
        c->add_option("--in", opt.in)->required();
        c->add_option("--out", opt.out, "write the coloring");
        add_common(c, opt);
        run(c, [&] {
            Digraph d = load_digraph(opt.in);
            Coloring col = color_short_cycles(d, opt.budget);
            bool valid = is_valid_coloring(d, col);
            std::cout << "COLORS " << color_count(col) << (valid ? " VALID" : " INVALID") << "\n";
            print_coloring_verbose(d, col);
            if (!opt.out.empty()) save_coloring(opt.out, col);
        });
    }

    // -------------------------------------------------------------- analyze
    auto* analyze = app.add_subcommand("analyze", "structural queries");
    analyze->require_subcommand(1);
    {
        auto* c = analyze->add_subcommand("scc", "strongly connected components");
        c->add_option("--in", opt.in)->required();
        add_common(c, opt);
        run(c, [&] {
            auto comps = strongly_connected_components(load_digraph(opt.in));
            std::cout << comps.size() << "\n";
            for (const auto& comp : comps) {
                for (std::size_t i = 0; i < comp.size(); ++i)
                    std::cout << comp[i] << (i + 1 < comp.size() ? ' ' : '\n');
            }
        });
    }
    {
        auto* c = analyze->add_subcommand("digirth", "shortest directed cycle length");
        c->add_option("--in", opt.in)->required();
        add_common(c, opt);
        run(c, [&] {
            auto g = digirth(load_digraph(opt.in));
            if (g)
                std::cout << *g << "\n";
            else
                std::cout << "ACYCLIC\n";
        });
    }
    {
        auto* c = analyze->add_subcommand("circumference", "longest directed cycle length");
        c->add_option("--in", opt.in)->required();
        add_common(c, opt);
        run(c, [&] {
            try {
                auto res = circumference(load_digraph(opt.in), opt.budget);
                if (res.length)
                    std::cout << *res.length << "\n";
                else
                    std::cout << "ACYCLIC\n";
            } catch (const budget_error& e) {
                std::cout << "UNKNOWN " << e.best() << "\n";
                exit_code = kExitUnknown;
            }
        });
    }
    {
        auto* c = analyze->add_subcommand("cycles", "exact set of cycle lengths");
        c->add_option("--in", opt.in)->required();
        add_common(c, opt);
        run(c, [&] {
            try {
                auto lengths = cycle_length_set(load_digraph(opt.in), opt.budget);
                if (lengths.empty()) {
                    std::cout << "ACYCLIC\n";
                } else {
                    bool first = true;
                    for (int len : lengths) {
                        std::cout << (first ? "" : " ") << len;
                        first = false;
                    }
                    std::cout << "\n";
                }
            } catch (const budget_error&) {
                std::cout << "UNKNOWN\n";
                exit_code = kExitUnknown;
            }
        });
    }
    {
        auto* c = analyze->add_subcommand("classify", "loops/parallels/digons of a multidigraph");
        c->add_option("--in", opt.in)->required();
        add_common(c, opt);
        run(c, [&] {
            auto rep = classify(load_multidigraph(opt.in));
            std::cout << "loops=" << rep.loops << " parallel=" << rep.parallel_arcs
                      << " digons=" << rep.digons << " simple=" << (rep.simple() ? "yes" : "no")
                      << " oriented=" << (rep.oriented() ? "yes" : "no") << "\n";
        });
    }

    // ----------------------------------------------------------- experiment
    auto* experiment = app.add_subcommand("experiment", "Monte Carlo harness");
    experiment->require_subcommand(1);
    auto add_experiment = [&](const std::string& name, ExperimentKind kind) {
        auto* c = experiment->add_subcommand(name, "run the " + name + " experiment");
        auto cfg = std::make_shared<ExperimentConfig>();
        cfg->kind = kind;
        c->add_option("--n", cfg->n_grid, "n grid")->required();
        c->add_option("--r", cfg->r_grid, "r grid");
        c->add_option("--p", cfg->p_grid, "p grid");
        c->add_option("--samples", cfg->samples, "samples per cell")->required();
        c->add_option("--seed", cfg->master_seed, "master seed");
        c->add_option("--oracle-budget", cfg->oracle_budget, "budget for exact sub-solvers");
        c->add_option("--out", opt.out, "CSV path (stdout if omitted)");
        add_common(c, opt);
        run(c, [&, cfg] {
            auto res = run_experiment(*cfg);
            if (opt.out.empty()) {
                write_csv(std::cout, res.records);
            } else {
                auto os = open_out(opt.out);
                write_csv(os, res.records);
            }
            write_summaries(std::cout, res.summaries);
        });
    };
    add_experiment("orientedness", ExperimentKind::orientedness);
    add_experiment("greedy-scaling", ExperimentKind::greedy_scaling);
    add_experiment("r1-cycles", ExperimentKind::r1_cycles);
    add_experiment("abk", ExperimentKind::abk_probe);
    add_experiment("upper-consistency", ExperimentKind::upper_bound_consistency);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return kExitUsage;
    } catch (const budget_error& e) {
        std::cout << "UNKNOWN\n";
        std::cerr << e.what() << "\n";
        return kExitUnknown;
    } catch (const rejection_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUnknown;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return exit_code;
}
