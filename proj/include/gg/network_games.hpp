#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gg/monoid.hpp"
#include "gg/open_graph.hpp"

namespace gg {

inline constexpr double kArgmaxTolerance = 1e-9;
inline constexpr std::uint64_t kDefaultProfileGuard = 10000000;

// One vertex's stage game: finite strategies, a broadcast into the monoid,
// and a utility over (own strategy, aggregated neighbourhood signal).
struct MonoidGame {
    std::vector<std::string> strategy_labels;     // X
    MonoidPtr monoid;                             // M
    std::vector<CommMonoid::Elem> broadcast;      // f: X -> M
    std::vector<std::vector<double>> utility;     // g[x][m], |X| rows, |M| cols

    std::size_t strategies() const { return strategy_labels.size(); }
    void validate() const;
};

// Every player shouts its choice; counters of 0s and 1s saturate at cap.
// Wins on a strict majority of neighbours, with ties won iff tie_wins.
MonoidGame majority_game(Nat cap, bool tie_wins = true);

// Provision a public good: worth `benefit` if anyone in the neighbourhood
// (including yourself) provides it, minus `cost` if you do.
MonoidGame best_shot_game(double benefit = 1.0, double cost = 0.4);

// Profiles are per-player strategy indices, ordered by the adjacency rows.
using StrategyProfile = std::vector<std::size_t>;

// Brute-force equilibria over a symmetrized adjacency matrix (row = player,
// entry = connection multiplicity; diagonal already doubled for self-loops).
// Deliberately tiny and independent of the engine in open_games/semantics.
std::vector<StrategyProfile> classical_nash_sym(const MonoidGame& game, const NatMatrix& adj,
                                                std::uint64_t guard = kDefaultProfileGuard);

// Same, reading the adjacency out of a closed graph.
std::vector<StrategyProfile> classical_nash(const MonoidGame& game, const OpenGraph& graph,
                                            std::uint64_t guard = kDefaultProfileGuard);

} // namespace gg
