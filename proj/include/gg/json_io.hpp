#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "gg/network_games.hpp"
#include "gg/open_graph.hpp"

namespace gg {

using Json = nlohmann::json;

// {"rows": r, "cols": c, "data": [row-major entries]}. Entries must be whole,
// non-negative and within the entry cap; anything else is an InputError.
NatMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const NatMatrix& m);

// Graph input, either full block form {"m","n","k","A","B","C","D","E"} or
// the edge-list shorthand {"vertices": k, "edges": [[i,j], ...]} for closed
// graphs. Edge lists keep the caller's vertex numbering.
struct GraphInput {
    raw::RawGraph raw;
    bool user_ordered = false;
};
GraphInput graph_input_from_json(const Json& j);

// Canonical block form with a schema tag.
Json graph_to_json(const OpenGraph& g);

// Stage-game selection: {"game":"majority","cap":2,"tie_wins":true} with cap
// optional, {"game":"best_shot","benefit":1.0,"cost":0.4} with both optional,
// or {"game":"custom","X":[...],"monoid":{...},"f":{...},"g":{...}} spelling
// out labels, broadcast and utilities. Custom monoids are built from
// {"kind":"sat_counter","cap":n}, {"kind":"bool_or"} and
// {"kind":"product","a":{...},"b":{...}}.
struct GameSpec {
    std::string kind;
    bool has_cap = false;
    Nat cap = 0;
    bool tie_wins = true;
    double benefit = 1.0;
    double cost = 0.4;
    std::optional<MonoidGame> custom;
};
GameSpec game_spec_from_json(const Json& j);

// Build the stage game, filling an omitted majority cap with default_cap.
MonoidGame resolve_game(const GameSpec& spec, Nat default_cap);

} // namespace gg
