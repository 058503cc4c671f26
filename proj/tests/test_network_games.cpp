#include "doctest.h"

#include <algorithm>

#include "gg/network_games.hpp"

using namespace gg;

namespace {

// Closed graph from an undirected edge list.
OpenGraph closed_graph(std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    NatMatrix e(k, k);
    for (auto [i, j] : edges) e.set(i, j, e.at(i, j) + 1);
    return OpenGraph(0, 0, k, AdjClass::zero(0), NatMatrix(0, 0), NatMatrix(0, k),
                     NatMatrix(k, 0), adj_class(e));
}

std::vector<std::string> render(const MonoidGame& g, const std::vector<StrategyProfile>& profs) {
    std::vector<std::string> out;
    for (const auto& p : profs) {
        std::string s;
        for (std::size_t i : p) s += g.strategy_labels[i];
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_SUITE("network_games") {

TEST_CASE("majority payoffs") {
    MonoidGame g = majority_game(2);
    g.validate();
    const CommMonoid& m = *g.monoid;
    CHECK(m.label(g.broadcast[0]) == "(1,0)");
    CHECK(m.label(g.broadcast[1]) == "(0,1)");
    CHECK(g.utility[0][m.by_label("(2,1)")] == 1.0);
    CHECK(g.utility[1][m.by_label("(2,1)")] == 0.0);
    CHECK(g.utility[0][m.by_label("(1,1)")] == 1.0); // tie won
    CHECK(g.utility[1][m.by_label("(1,1)")] == 1.0);
    MonoidGame strict = majority_game(2, false);
    CHECK(strict.utility[0][m.by_label("(1,1)")] == 0.0);
    CHECK(strict.utility[1][m.by_label("(1,1)")] == 0.0);
    CHECK_THROWS_AS(majority_game(0), InputError);
}

TEST_CASE("best shot payoffs") {
    MonoidGame g = best_shot_game(1.0, 0.4);
    CHECK(g.utility[0][0] == 0.0);
    CHECK(g.utility[0][1] == 1.0);
    CHECK(g.utility[1][0] == doctest::Approx(0.6));
    CHECK(g.utility[1][1] == doctest::Approx(0.6));
}

TEST_CASE("equilibria on pinned graphs") {
    MonoidGame maj = majority_game(2);
    MonoidGame shot = best_shot_game();

    OpenGraph edge = closed_graph(2, {{0, 1}});
    OpenGraph triangle = closed_graph(3, {{0, 1}, {1, 2}, {0, 2}});

    CHECK(render(maj, classical_nash(maj, triangle)) ==
          std::vector<std::string>{"000", "111"});
    CHECK(render(shot, classical_nash(shot, edge)) ==
          std::vector<std::string>{"01", "10"});
    // majority is a coordination game: neighbours copy each other
    CHECK(render(maj, classical_nash(maj, edge)) ==
          std::vector<std::string>{"00", "11"});
    // single vertex: no neighbours, so providing wins the best-shot game
    CHECK(render(shot, classical_nash(shot, closed_graph(1, {}))) ==
          std::vector<std::string>{"1"});
}

TEST_CASE("profiles permute with the vertices") {
    MonoidGame maj = majority_game(2);
    MonoidGame shot = best_shot_game();
    // path 0-1-2 and all of its relabelings
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> paths = {
        {{0, 1}, {1, 2}}, {{0, 2}, {2, 1}}, {{1, 0}, {0, 2}},
        {{1, 2}, {2, 0}}, {{2, 0}, {0, 1}}, {{2, 1}, {1, 0}}};
    // centre index per labeling above
    std::vector<std::size_t> centre = {1, 2, 0, 2, 0, 1};
    for (std::size_t i = 0; i < paths.size(); ++i) {
        NatMatrix adj(3, 3);
        for (auto [a, b] : paths[i]) {
            adj.set(a, b, adj.at(a, b) + 1);
            adj.set(b, a, adj.at(b, a) + 1);
        }
        std::size_t c = centre[i];
        // majority: consensus only, whatever the labeling
        CHECK(render(maj, classical_nash_sym(maj, adj)) ==
              std::vector<std::string>{"000", "111"});
        // best-shot equilibria are asymmetric, so they track the labeling:
        // either the centre provides alone or both leaves provide
        std::string centre_only = "000";
        std::string leaves_only = "111";
        centre_only[c] = '1';
        leaves_only[c] = '0';
        std::vector<std::string> want = {centre_only, leaves_only};
        std::sort(want.begin(), want.end());
        CHECK(render(shot, classical_nash_sym(shot, adj)) == want);
    }
}

TEST_CASE("self-loops count twice") {
    MonoidGame maj = majority_game(2);
    // one vertex with a self-loop: it hears itself twice
    NatMatrix adj(1, 1);
    adj.set(0, 0, 2);
    auto eq = classical_nash_sym(maj, adj);
    // hearing your own vote means both options stay best responses
    CHECK(render(maj, eq) == std::vector<std::string>{"0", "1"});
    OpenGraph loop = closed_graph(1, {{0, 0}});
    CHECK(symmetrize(loop.e()) == adj);
    CHECK(render(maj, classical_nash(maj, loop)) == std::vector<std::string>{"0", "1"});
}

TEST_CASE("guard and input errors") {
    MonoidGame maj = majority_game(1);
    CHECK_THROWS_AS(classical_nash_sym(maj, NatMatrix(30, 30), 1000), BoundError);
    CHECK_THROWS_AS(classical_nash_sym(maj, NatMatrix(2, 3)), DimensionError);
    OpenGraph open_g(1, 0, 0, AdjClass::zero(1), NatMatrix(1, 0), NatMatrix(1, 0),
                     NatMatrix(0, 0), AdjClass::zero(0));
    CHECK_THROWS_AS(classical_nash(maj, open_g), InputError);
    MonoidGame broken = maj;
    broken.broadcast.pop_back();
    CHECK_THROWS_AS(broken.validate(), InputError);
}

} // TEST_SUITE
