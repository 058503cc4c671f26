#include <cstddef>

#include "doctest.h"
#include "gg/errors.hpp"
#include "gg/json_io.hpp"

TEST_SUITE("json") {
    using namespace gg;

    TEST_CASE("matrices round trip and reject junk") {
        NatMatrix m{{1, 2, 3}, {4, 5, 6}};
        Json j = matrix_to_json(m);
        CHECK(j["rows"] == 2);
        CHECK(j["cols"] == 3);
        CHECK(matrix_from_json(j) == m);

        NatMatrix empty(0, 3);
        CHECK(matrix_from_json(matrix_to_json(empty)) == empty);

        CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"cols":1})")), InputError);
        CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"data":[-1]})")),
                        InputError);
        CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"data":[1.5]})")),
                        InputError);
        CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":2,"cols":1,"data":[1]})")),
                        InputError);
        CHECK_THROWS_AS(
            matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"data":[4294967296]})")),
            InputError);
        CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":-1,"cols":0,"data":[]})")),
                        InputError);
        CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([1,2])")), InputError);
    }

    TEST_CASE("graphs round trip through block form") {
        raw::RawGraph g{1,
                        2,
                        2,
                        NatMatrix{{1}},
                        NatMatrix{{1, 0}},
                        NatMatrix{{1, 1}},
                        NatMatrix{{0, 1}, {1, 0}},
                        NatMatrix{{0, 2}, {0, 0}}};
        OpenGraph og = canonicalize(g);
        Json j = graph_to_json(og);
        CHECK(j["schema"] == 1);
        GraphInput in = graph_input_from_json(j);
        CHECK_FALSE(in.user_ordered);
        CHECK(canonicalize(in.raw) == og);

        Json bad_shape = j;
        bad_shape["A"] = matrix_to_json(NatMatrix(2, 2));
        CHECK_THROWS_AS(graph_input_from_json(bad_shape), InputError);

        Json missing = j;
        missing.erase("E");
        CHECK_THROWS_AS(graph_input_from_json(missing), InputError);
    }

    TEST_CASE("edge lists build closed graphs in input order") {
        GraphInput in =
            graph_input_from_json(Json::parse(R"({"vertices":3,"edges":[[0,1],[1,2],[0,1]]})"));
        CHECK(in.user_ordered);
        CHECK(in.raw.m == 0);
        CHECK(in.raw.n == 0);
        CHECK(in.raw.k == 3);
        NatMatrix want{{0, 2, 0}, {0, 0, 1}, {0, 0, 0}};
        CHECK(in.raw.e == want);

        NatMatrix none(2, 2);
        CHECK(graph_input_from_json(Json::parse(R"({"vertices":2})")).raw.e == none);

        CHECK_THROWS_AS(graph_input_from_json(Json::parse(R"({"vertices":2,"edges":[[0,2]]})")),
                        InputError);
        CHECK_THROWS_AS(graph_input_from_json(Json::parse(R"({"vertices":2,"edges":[[0]]})")),
                        InputError);
        CHECK_THROWS_AS(graph_input_from_json(Json::parse(R"({"edges":[[0,1]]})")), InputError);
    }

    TEST_CASE("game specs cover the built-ins") {
        GameSpec s =
            game_spec_from_json(Json::parse(R"({"game":"majority","cap":3,"tie_wins":false})"));
        CHECK(s.kind == "majority");
        CHECK(s.has_cap);
        CHECK(s.cap == 3);
        CHECK_FALSE(s.tie_wins);
        CHECK(resolve_game(s, 1).monoid->size() == 16);

        GameSpec dflt = game_spec_from_json(Json::parse(R"({"game":"majority"})"));
        CHECK_FALSE(dflt.has_cap);
        CHECK(resolve_game(dflt, 2).monoid->size() == 9);

        GameSpec b = game_spec_from_json(Json::parse(R"({"game":"best_shot","cost":0.25})"));
        MonoidGame bg = resolve_game(b, 1);
        CHECK(bg.utility[1][0] == doctest::Approx(0.75));

        CHECK_THROWS_AS(game_spec_from_json(Json::parse(R"({"game":"chicken"})")), InputError);
        CHECK_THROWS_AS(game_spec_from_json(Json::parse(R"({"game":"majority","cap":0})")),
                        InputError);
        CHECK_THROWS_AS(game_spec_from_json(Json::parse(R"({"game":"majority","tie_wins":1})")),
                        InputError);
    }

    TEST_CASE("a custom spec can replicate a built-in") {
        Json j = Json::parse(R"({"game":"custom","X":["0","1"],
            "monoid":{"kind":"bool_or"},
            "f":{"0":"0","1":"1"},
            "g":{"0":{"1":1.0},"1":{"0":0.6,"1":0.6}}})");
        MonoidGame c = resolve_game(game_spec_from_json(j), 1);
        MonoidGame ref = best_shot_game(1.0, 0.4);
        CHECK(c.strategy_labels == ref.strategy_labels);
        CHECK(c.broadcast == ref.broadcast);
        REQUIRE(c.utility.size() == ref.utility.size());
        for (std::size_t s = 0; s < c.utility.size(); ++s) {
            REQUIRE(c.utility[s].size() == ref.utility[s].size());
            for (std::size_t e = 0; e < c.utility[s].size(); ++e)
                CHECK(c.utility[s][e] == doctest::Approx(ref.utility[s][e]));
        }
        CHECK(c.monoid->same_table(*ref.monoid));
    }

    TEST_CASE("custom specs validate their pieces") {
        MonoidGame p = resolve_game(game_spec_from_json(Json::parse(
                                        R"js({"game":"custom","X":["x"],
                "monoid":{"kind":"product","a":{"kind":"bool_or"},
                          "b":{"kind":"sat_counter","cap":1}},
                "f":{"x":"(1,0)"},"g":{}})js")),
                                    1);
        CHECK(p.monoid->size() == 4);
        CHECK(p.broadcast[0] == p.monoid->by_label("(1,0)"));
        CHECK(p.utility[0] == std::vector<double>(4, 0.0));

        CHECK_THROWS_AS(game_spec_from_json(Json::parse(
                            R"({"game":"custom","X":["a"],
                "monoid":{"kind":"bool_or"},"f":{"a":"2"},"g":{}})")),
                        InputError);
        CHECK_THROWS_AS(game_spec_from_json(Json::parse(
                            R"({"game":"custom","X":["a"],
                "monoid":{"kind":"nope"},"f":{"a":"0"},"g":{}})")),
                        InputError);
        CHECK_THROWS_AS(game_spec_from_json(Json::parse(
                            R"({"game":"custom","X":[],
                "monoid":{"kind":"bool_or"},"f":{},"g":{}})")),
                        InputError);
        CHECK_THROWS_AS(game_spec_from_json(Json::parse(
                            R"({"game":"custom","X":["a"],
                "monoid":{"kind":"bool_or"},"g":{}})")),
                        InputError);
    }
}
