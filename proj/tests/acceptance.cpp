// End-to-end gate: one line per criterion, exit 0 only if every line passes.
// argv[1] must be the path to the graphgame CLI binary (used by the
// determinism criterion; everything else runs in-process).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gg/diagram.hpp"
#include "gg/errors.hpp"
#include "gg/network_games.hpp"
#include "gg/open_graph.hpp"
#include "gg/semantics.hpp"
#include "gg/suites.hpp"

namespace {

using namespace gg;

const char* kMatrixFixture =
    "((comult ; (comult # id(1))) # id(1) # id(1))"
    " ; (mult # id(1) # id(1) # id(1))"
    " ; (id(1) # swap(2,1))"
    " ; (mult # mult)";

const char* kDoubledA =
    "(comult # comult) ; (id(1) # swap(1,1) # id(1)) ; (cup # (swap(1,1) ; cup))";
const char* kDoubledB = "(comult # comult) ; (id(1) # swap(1,1) # id(1)) ; (cup # cup)";

bool matrix_fixture(std::string& detail) {
    OpenGraph g = eval(*parse_term(kMatrixFixture));
    if (g.vertices() != 0) {
        detail = "expected a vertex-free normal form";
        return false;
    }
    NatMatrix want{{2, 1}, {0, 1}, {1, 0}};
    if (!(g.b() == want)) {
        detail = "connection matrix came out as " + to_string(g.b());
        return false;
    }
    return true;
}

bool adjacency_fixture(std::string& detail) {
    OpenGraph g1 = eval(*parse_term(kDoubledA));
    OpenGraph g2 = eval(*parse_term(kDoubledB));
    if (!og_equal(g1, g2)) {
        detail = "the two spellings normalize differently";
        return false;
    }
    NatMatrix want{{0, 2}, {0, 0}};
    if (!(g1.a().canon() == want) || !(g2.a().canon() == want)) {
        detail = "adjacency class canon is not [[0,2],[0,0]]";
        return false;
    }
    if (!(adj_class(NatMatrix{{0, 1}, {1, 0}}).canon() == want) ||
        !(adj_class(NatMatrix{{0, 2}, {0, 0}}).canon() == want)) {
        detail = "the two matrix representatives fall in different classes";
        return false;
    }
    return true;
}

bool rows_pass(const std::vector<CheckResult>& rows, std::string& detail) {
    for (const CheckResult& r : rows)
        if (!r.pass) {
            detail = r.name + ": " + r.detail;
            return false;
        }
    return true;
}

bool axiom_rows(std::string& detail) {
    std::vector<CheckResult> rows = axiom_suite();
    if (rows.size() != 17) {
        detail = "expected 17 axiom rows";
        return false;
    }
    return rows_pass(rows, detail);
}

bool prop_rows(std::string& detail) { return rows_pass(prop_law_suite(0, 500), detail); }

bool functor_rows(std::string& detail) { return rows_pass(functor_suite(0, 20), detail); }

OpenGraph closed(std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    NatMatrix e(k, k);
    for (auto [i, j] : edges) e.set(i, j, e.at(i, j) + 1);
    return canonicalize(raw::RawGraph{0, 0, k, NatMatrix(0, 0), NatMatrix(0, 0),
                                      NatMatrix(0, k), NatMatrix(k, 0), std::move(e)});
}

bool closed_game_sanity(std::string& detail) {
    struct Fixture {
        const char* name;
        OpenGraph g;
    };
    std::vector<Fixture> graphs;
    graphs.push_back({"single edge", closed(2, {{0, 1}})});
    graphs.push_back({"doubled edge", closed(2, {{0, 1}, {0, 1}})});
    graphs.push_back({"triangle", closed(3, {{0, 1}, {1, 2}, {0, 2}})});
    graphs.push_back({"4-cycle", closed(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})});
    graphs.push_back({"3-path", closed(3, {{0, 1}, {1, 2}})});
    graphs.push_back({"single vertex", closed(1, {})});

    for (const Fixture& f : graphs) {
        Nat cap = recommended_cap(symmetrize(f.g.e()));
        std::vector<MonoidGame> games = {majority_game(cap, true), best_shot_game(1.0, 0.4)};
        for (std::size_t gi = 0; gi < games.size(); ++gi) {
            std::vector<StrategyProfile> engine = nash(f.g, games[gi]);
            std::vector<StrategyProfile> direct = classical_nash(games[gi], f.g);
            if (engine != direct) {
                detail = std::string(f.name) + (gi == 0 ? " majority" : " best shot") +
                         ": engine and direct search disagree";
                return false;
            }
        }
    }

    std::vector<StrategyProfile> tri = nash(closed(3, {{0, 1}, {1, 2}, {0, 2}}),
                                            majority_game(2, true));
    if (tri != std::vector<StrategyProfile>{{0, 0, 0}, {1, 1, 1}}) {
        detail = "triangle majority equilibria are not consensus";
        return false;
    }
    std::vector<StrategyProfile> edge = nash(closed(2, {{0, 1}}), best_shot_game(1.0, 0.4));
    if (edge != std::vector<StrategyProfile>{{1, 0}, {0, 1}}) {
        detail = "single-edge best shot equilibria are not one-provider";
        return false;
    }
    return true;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// Runs every CLI command twice, redirecting stdout and stderr, and demands
// byte-identical output plus identical exit status.
bool determinism(const std::string& cli, std::string& detail) {
    namespace fs = std::filesystem;
    if (cli.empty()) {
        detail = "pass the CLI binary path as argv[1]";
        return false;
    }
    fs::path dir = fs::temp_directory_path() / "gg_acceptance";
    fs::create_directories(dir);

    fs::path tri = dir / "tri.json";
    std::ofstream(tri) << R"({"vertices":3,"edges":[[0,1],[1,2],[2,0]]})";

    std::vector<std::string> commands = {
        "normalize --expr " + quote(kMatrixFixture) + " --json",
        "normalize --expr " + quote(kDoubledA),
        "eq --expr " + quote(kDoubledA) + " --expr " + quote(kDoubledB) + " --json",
        "nash --file " + quote(tri.string()) + " --game " + quote(R"({"game":"majority"})") +
            " --json",
        "nash --expr " + quote("(vertex # vertex) ; cup") + " --game " +
            quote(R"({"game":"best_shot"})"),
        "check axioms --json",
        "check props --seed 7 --instances 40 --json",
        "check functor --seed 3 --random-terms 4 --json",
    };

    for (std::size_t i = 0; i < commands.size(); ++i) {
        fs::path oa = dir / ("out_a_" + std::to_string(i) + ".txt");
        fs::path ob = dir / ("out_b_" + std::to_string(i) + ".txt");
        fs::path ea = dir / ("err_a_" + std::to_string(i) + ".txt");
        fs::path eb = dir / ("err_b_" + std::to_string(i) + ".txt");
        std::string base = quote(cli) + " " + commands[i];
        int ra = std::system((base + " > " + quote(oa.string()) + " 2> " +
                              quote(ea.string())).c_str());
        int rb = std::system((base + " > " + quote(ob.string()) + " 2> " +
                              quote(eb.string())).c_str());
        if (ra != rb) {
            detail = "exit status changed between runs of: " + commands[i];
            return false;
        }
        if (slurp(oa) != slurp(ob) || slurp(ea) != slurp(eb)) {
            detail = "output changed between runs of: " + commands[i];
            return false;
        }
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    struct Criterion {
        std::string name;
        double limit_s;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria = {
        {"matrix fixture normalizes to its connection matrix", 1.0, matrix_fixture},
        {"doubled-edge spellings share one adjacency class", 1.0, adjacency_fixture},
        {"wiring axioms hold in the normal form", 5.0, axiom_rows},
        {"prop laws hold on 500 random instances per family", 30.0, prop_rows},
        {"compositional and direct game semantics agree", 300.0, functor_rows},
        {"engine equilibria match the direct search", 10.0, closed_game_sanity},
        {"repeated runs are byte-identical", 600.0,
         [&cli](std::string& d) { return determinism(cli, d); }},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (pass && secs > criteria[i].limit_s) {
            pass = false;
            detail = "over the time limit";
        }
        std::cout << "[" << i + 1 << "] " << criteria[i].name << " ... "
                  << (pass ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(2)
                  << secs << "s)";
        if (!pass && !detail.empty()) std::cout << "  " << detail;
        std::cout << "\n";
        all = all && pass;
    }
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES") << "\n";
    return all ? 0 : 1;
}
