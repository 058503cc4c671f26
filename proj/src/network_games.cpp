#include "gg/network_games.hpp"

#include "gg/errors.hpp"

namespace gg {

void MonoidGame::validate() const {
    if (!monoid) throw InputError("game has no monoid");
    if (strategy_labels.empty()) throw InputError("game has no strategies");
    if (broadcast.size() != strategies()) throw InputError("broadcast table size mismatch");
    for (CommMonoid::Elem e : broadcast)
        if (e >= monoid->size()) throw InputError("broadcast lands outside the monoid");
    if (utility.size() != strategies()) throw InputError("utility table size mismatch");
    for (const auto& row : utility)
        if (row.size() != monoid->size()) throw InputError("utility row size mismatch");
}

MonoidGame majority_game(Nat cap, bool tie_wins) {
    if (cap < 1) throw InputError("majority cap must be at least 1");
    MonoidPtr counter = CommMonoid::sat_counter(cap);
    MonoidPtr m = CommMonoid::product(counter, counter);
    std::size_t nb = counter->size();
    MonoidGame g;
    g.strategy_labels = {"0", "1"};
    g.monoid = m;
    g.broadcast = {m->by_label("(1,0)"), m->by_label("(0,1)")};
    g.utility.assign(2, std::vector<double>(m->size(), 0.0));
    for (std::size_t e = 0; e < m->size(); ++e) {
        std::size_t zeros = e / nb, ones = e % nb;
        for (std::size_t s = 0; s < 2; ++s) {
            std::size_t own = s == 0 ? zeros : ones;
            std::size_t other = s == 0 ? ones : zeros;
            g.utility[s][e] = (own > other || (tie_wins && own == other)) ? 1.0 : 0.0;
        }
    }
    g.validate();
    return g;
}

MonoidGame best_shot_game(double benefit, double cost) {
    MonoidGame g;
    g.strategy_labels = {"0", "1"};
    g.monoid = CommMonoid::bool_or();
    g.broadcast = {0, 1};
    g.utility = {{0.0, benefit},                  // not providing: neighbour's good or nothing
                 {benefit - cost, benefit - cost}}; // providing always secures it
    g.validate();
    return g;
}

std::vector<StrategyProfile> classical_nash_sym(const MonoidGame& game, const NatMatrix& adj,
                                                std::uint64_t guard) {
    game.validate();
    if (adj.rows() != adj.cols()) throw DimensionError("adjacency must be square");
    const std::size_t k = adj.rows(), nx = game.strategies();
    const CommMonoid& m = *game.monoid;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
        if (total > guard || (total *= nx) > guard)
            throw BoundError("profile space exceeds guard " + std::to_string(guard));
    std::vector<StrategyProfile> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        StrategyProfile prof(k);
        for (std::size_t i = 0, rest = idx; i < k; ++i, rest /= nx) prof[i] = rest % nx;
        bool nash = true;
        for (std::size_t p = 0; p < k && nash; ++p) {
            auto payoff = [&](std::size_t dev) {
                CommMonoid::Elem seen = m.unit();
                for (std::size_t j = 0; j < k; ++j)
                    seen = m.op(seen, m.scalar_act(adj.at(p, j),
                                                   game.broadcast[j == p ? dev : prof[j]]));
                return game.utility[dev][seen];
            };
            double own = payoff(prof[p]);
            for (std::size_t s = 0; s < nx && nash; ++s)
                if (payoff(s) > own + kArgmaxTolerance) nash = false;
        }
        if (nash) out.push_back(std::move(prof));
    }
    return out;
}

std::vector<StrategyProfile> classical_nash(const MonoidGame& game, const OpenGraph& graph,
                                            std::uint64_t guard) {
    if (graph.dom() != 0 || graph.cod() != 0)
        throw InputError("equilibria need a closed graph, got " + std::to_string(graph.dom()) +
                         " -> " + std::to_string(graph.cod()));
    return classical_nash_sym(game, symmetrize(graph.e()), guard);
}

} // namespace gg
