#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dichroma/digraph.hpp"
#include "dichroma/structure.hpp"

// Drives the installed binary end to end through the documented text formats
// and exit codes.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(DICHROMA_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string tmp_path(const std::string& name) {
    return testing::TempDir() + "/" + name;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path);
    os << content;
}

}  // namespace

TEST(Cli, BlowupListcheckPipeline) {
    std::string d = tmp_path("blowup.dg"), l = tmp_path("blowup.ls");
    auto gen = run_cli("gen blowup --k 3 --t 1 --out " + d + " --lists " + l);
    EXPECT_EQ(gen.exit_code, 0);
    auto check = run_cli("solve listcheck --in " + d + " --lists " + l);
    EXPECT_EQ(check.exit_code, 0);
    EXPECT_EQ(check.out, "NOT L-COLORABLE\n");
}

TEST(Cli, SolveAlphaOnTriangle) {
    std::string path = tmp_path("c3.dg");
    write_file(path, "DIGRAPH 3 3\n0 1\n1 2\n2 0\n");
    auto res = run_cli("solve alpha --in " + path);
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.out, "2\n");
}

TEST(Cli, ColorShortCyclesOnC5) {
    std::string path = tmp_path("c5.dg");
    write_file(path, "DIGRAPH 5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    auto res = run_cli("color short-cycles --in " + path);
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.out, "COLORS 2 VALID\n");
}

TEST(Cli, GenerateAnalyzeRoundTrip) {
    std::string path = tmp_path("t.dg");
    auto gen = run_cli("gen tournament --n 7 --seed 11 --out " + path);
    EXPECT_EQ(gen.exit_code, 0);

    // The written file parses back to a digraph identical to a fresh read.
    std::ifstream is(path);
    dichroma::Digraph d = dichroma::read_digraph(is);
    EXPECT_EQ(d.vertex_count(), 7);
    EXPECT_EQ(d.arc_count(), 21);
    std::ostringstream os;
    dichroma::write_digraph(os, d);
    std::ifstream is2(path);
    std::stringstream file_content;
    file_content << is2.rdbuf();
    EXPECT_EQ(os.str(), file_content.str());

    auto scc = run_cli("analyze scc --in " + path);
    EXPECT_EQ(scc.exit_code, 0);
    EXPECT_FALSE(scc.out.empty());
    auto girth = run_cli("analyze digirth --in " + path);
    EXPECT_TRUE(girth.out == "3\n" || girth.out == "ACYCLIC\n");
}

TEST(Cli, ClassifyMultidigraph) {
    std::string path = tmp_path("m.mdg");
    write_file(path, "MULTIDIGRAPH 2 3\n0 0\n0 1\n1 0\n");
    auto res = run_cli("analyze classify --in " + path);
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.out, "loops=1 parallel=0 digons=1 simple=no oriented=no\n");
}

TEST(Cli, BudgetGivesUnknownAndExitTwo) {
    std::string path = tmp_path("k45.dg");
    // Bidirected complete bipartite K_{4,5}: longest-cycle search cannot
    // finish within a tiny budget.
    std::ostringstream os;
    os << "DIGRAPH 9 40\n";
    for (int a = 0; a < 4; ++a)
        for (int b = 4; b < 9; ++b) os << a << ' ' << b << '\n' << b << ' ' << a << '\n';
    write_file(path, os.str());
    auto res = run_cli("analyze circumference --in " + path + " --budget 50");
    EXPECT_EQ(res.exit_code, 2);
    EXPECT_EQ(res.out.substr(0, 7), "UNKNOWN");
}

TEST(Cli, ExperimentEmitsCsvAndSummary) {
    std::string csv = tmp_path("exp.csv");
    auto res = run_cli("experiment orientedness --n 5 --r 1 --samples 200 --seed 9 --out " + csv);
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.out.find("summary kind=orientedness"), std::string::npos);
    std::ifstream is(csv);
    std::string header;
    std::getline(is, header);
    EXPECT_EQ(header, "kind,n,r,p,sample,seed,stat,value");
    int lines = 0;
    std::string line;
    while (std::getline(is, line)) ++lines;
    EXPECT_EQ(lines, 200);
}

TEST(Cli, UsageErrorsExitSixtyFour) {
    EXPECT_EQ(run_cli("bogus").exit_code, 64);
    EXPECT_EQ(run_cli("solve alpha --no-such-flag x").exit_code, 64);
}

TEST(Cli, MissingFileExitsOne) {
    EXPECT_EQ(run_cli("solve alpha --in /nonexistent/x.dg").exit_code, 1);
}
