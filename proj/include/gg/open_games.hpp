#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "gg/monoid.hpp"
#include "gg/network_games.hpp"

namespace gg {

// What comes back on the right boundary once the forward signal is known.
// For a game of codomain width n this maps M^n to M^n.
using Continuation = std::function<MonoidVector(const MonoidVector&)>;

class FiniteOpenGame;
using GamePtr = std::shared_ptr<const FiniteOpenGame>;

// Bidirectional game over monoid-vector boundaries. Forward signals of width
// dom() enter on the left and leave with width cod() on the right; requests
// travel the opposite way. Players are leaves, each with finitely many
// strategies; a profile lists one choice per leaf. Behaviour is closure-valued
// so composites stay lazy in the continuation.
class FiniteOpenGame {
  public:
    using PlayFn = std::function<MonoidVector(const StrategyProfile&, const MonoidVector&)>;
    using CoplayFn =
        std::function<MonoidVector(const StrategyProfile&, const MonoidVector&, const MonoidVector&)>;
    // (leaf, profile, x, continuation, deviation) -> payoff. The profile entry
    // at the leaf itself is ignored in favour of the deviation. Implementations
    // must consult the continuation exactly once per call; the engine's
    // equivalence checks instrument continuations and rely on this.
    using UtilityFn = std::function<double(std::size_t, const StrategyProfile&, const MonoidVector&,
                                           const Continuation&, std::size_t)>;

    FiniteOpenGame(std::size_t dom, std::size_t cod, MonoidPtr monoid,
                   std::vector<std::size_t> leaf_sizes, PlayFn play, CoplayFn coplay,
                   UtilityFn utility);

    std::size_t dom() const { return dom_; }
    std::size_t cod() const { return cod_; }
    const MonoidPtr& monoid() const { return monoid_; }
    std::size_t leaves() const { return leaf_sizes_.size(); }
    const std::vector<std::size_t>& leaf_sizes() const { return leaf_sizes_; }

    MonoidVector play(const StrategyProfile& prof, const MonoidVector& x) const;
    MonoidVector coplay(const StrategyProfile& prof, const MonoidVector& x,
                        const MonoidVector& r) const;

    // Payoff to `leaf` when it plays `s` and everyone else follows `prof`.
    double leaf_utility(std::size_t leaf, const StrategyProfile& prof, const MonoidVector& x,
                        const Continuation& k, std::size_t s) const;
    // Strategies within kArgmaxTolerance of the leaf's maximum, ascending.
    std::vector<std::size_t> leaf_best(std::size_t leaf, const StrategyProfile& prof,
                                       const MonoidVector& x, const Continuation& k) const;

    // Mixed-radix profile enumeration, leaf 0 least significant.
    std::uint64_t profile_count(std::uint64_t guard = kDefaultProfileGuard) const;
    StrategyProfile profile_at(std::uint64_t index) const;

    // Profiles where no leaf can improve by more than kArgmaxTolerance, in
    // enumeration order. A game with no leaves yields the empty profile.
    std::vector<StrategyProfile> best(const MonoidVector& x, const Continuation& k,
                                      std::uint64_t guard = kDefaultProfileGuard) const;

  private:
    void check_x(const MonoidVector& x) const;
    void check_profile(const StrategyProfile& prof) const;

    std::size_t dom_;
    std::size_t cod_;
    MonoidPtr monoid_;
    std::vector<std::size_t> leaf_sizes_;
    PlayFn play_;
    CoplayFn coplay_;
    UtilityFn utility_;
};

// Game with no players: just a forward map and a backward map.
GamePtr lifted_game(MonoidPtr monoid, std::size_t dom, std::size_t cod,
                    FiniteOpenGame::PlayFn play, FiniteOpenGame::CoplayFn coplay);

GamePtr identity_game(MonoidPtr monoid, std::size_t width);

// Sequential composition: forward signals feed left to right and requests
// travel back through both. DimensionError unless g's codomain matches h's
// domain; InputError unless the monoids agree.
GamePtr game_compose(GamePtr g, GamePtr h);

// Side-by-side composition; boundaries and profiles concatenate, g first.
GamePtr game_tensor(GamePtr g, GamePtr h);

} // namespace gg
