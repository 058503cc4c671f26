#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gg/diagram.hpp"
#include "gg/network_games.hpp"
#include "gg/open_games.hpp"
#include "gg/open_graph.hpp"

namespace gg {

// Open game of a graph, built in one piece. Every vertex plays the stage
// game; signals aggregate along connections, with both directions of every
// internal edge heard and self-loops heard twice. Leaves follow the graph's
// vertex order.
GamePtr direct_game_raw(const raw::RawGraph& g, const MonoidGame& game);
GamePtr direct_game(const OpenGraph& g, const MonoidGame& game);

// Open game of a wiring term, built by composing and tensoring the games of
// its atoms. Leaves follow the term's vertex occurrences left to right.
GamePtr compositional_game(const DiagramTerm& t, const MonoidGame& game);

struct EqOptions {
    std::uint64_t state_budget = 2000000; // play/coplay/best sweep cap
    std::uint64_t kappa_budget = 20000;   // response assignments per utility probe
    std::size_t sample_tables = 3;        // random whole-continuation spot checks
    std::uint64_t seed = 0;
};

struct EqReport {
    bool equal = false;
    std::string detail; // first mismatch; empty when equal
};

// Extensional equivalence of finite open games: equal plays, equal coplays,
// and equal best-response sets under every continuation. b's leaf i is
// matched with a's leaf a_leaf_of_b_leaf[i]. Decides the continuation
// quantifier exactly for games that consult the continuation once per
// utility call, by enumerating responses on the reachable access points.
// Throws BoundError when a sweep exceeds the budgets.
EqReport games_equal(const FiniteOpenGame& a, const FiniteOpenGame& b,
                     const std::vector<std::size_t>& a_leaf_of_b_leaf, EqOptions opt = {});

// Equilibria of a closed graph under the stage game, via the open-game
// engine and the trivial continuation. Profile entries follow normal-form
// vertex order (raw overload: the representative's own order); profiles are
// listed in ascending enumeration order, first vertex least significant.
std::vector<StrategyProfile> nash(const OpenGraph& g, const MonoidGame& game,
                                  std::uint64_t guard = kDefaultProfileGuard);
std::vector<StrategyProfile> nash_raw(const raw::RawGraph& g, const MonoidGame& game,
                                      std::uint64_t guard = kDefaultProfileGuard);

// Smallest saturation cap that keeps every neighbourhood count exact: the
// largest row sum of the symmetrized adjacency, and at least 1.
Nat recommended_cap(const NatMatrix& sym_adjacency);

// The open-game instance of the prop interface, vertices playing `game`.
struct GameProp {
    using Morphism = GamePtr;
    MonoidGame game;
    Morphism identity(std::size_t n) const { return identity_game(game.monoid, n); }
    Morphism compose(const Morphism& g, const Morphism& h) const { return game_compose(g, h); }
    Morphism tensor(const Morphism& g, const Morphism& h) const { return game_tensor(g, h); }
};

} // namespace gg
