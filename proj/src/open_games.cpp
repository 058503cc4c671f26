#include "gg/open_games.hpp"

#include <algorithm>
#include <utility>

#include "gg/errors.hpp"

namespace gg {

namespace {

std::pair<StrategyProfile, StrategyProfile> split_profile(const StrategyProfile& prof,
                                                          std::size_t left) {
    return {StrategyProfile(prof.begin(), prof.begin() + left),
            StrategyProfile(prof.begin() + left, prof.end())};
}

std::vector<std::size_t> concat_sizes(const std::vector<std::size_t>& a,
                                      const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

FiniteOpenGame::FiniteOpenGame(std::size_t dom, std::size_t cod, MonoidPtr monoid,
                               std::vector<std::size_t> leaf_sizes, PlayFn play, CoplayFn coplay,
                               UtilityFn utility)
    : dom_(dom),
      cod_(cod),
      monoid_(std::move(monoid)),
      leaf_sizes_(std::move(leaf_sizes)),
      play_(std::move(play)),
      coplay_(std::move(coplay)),
      utility_(std::move(utility)) {
    if (!monoid_) throw InputError("game needs a monoid");
    if (!play_ || !coplay_ || !utility_) throw InputError("game needs play, coplay and utility");
}

void FiniteOpenGame::check_x(const MonoidVector& x) const {
    if (x.width() != dom_)
        throw DimensionError("forward signal has width " + std::to_string(x.width()) +
                             ", game expects " + std::to_string(dom_));
    for (CommMonoid::Elem e : x.elems)
        if (e >= monoid_->size()) throw InputError("signal entry outside the monoid carrier");
}

void FiniteOpenGame::check_profile(const StrategyProfile& prof) const {
    if (prof.size() != leaves())
        throw InputError("profile has " + std::to_string(prof.size()) + " entries, game has " +
                         std::to_string(leaves()) + " leaves");
    for (std::size_t i = 0; i < prof.size(); ++i)
        if (prof[i] >= leaf_sizes_[i]) throw InputError("strategy index out of range");
}

MonoidVector FiniteOpenGame::play(const StrategyProfile& prof, const MonoidVector& x) const {
    check_profile(prof);
    check_x(x);
    MonoidVector y = play_(prof, x);
    if (y.width() != cod_) throw DimensionError("play produced the wrong width");
    return y;
}

MonoidVector FiniteOpenGame::coplay(const StrategyProfile& prof, const MonoidVector& x,
                                    const MonoidVector& r) const {
    check_profile(prof);
    check_x(x);
    if (r.width() != cod_)
        throw DimensionError("request has width " + std::to_string(r.width()) +
                             ", game expects " + std::to_string(cod_));
    MonoidVector back = coplay_(prof, x, r);
    if (back.width() != dom_) throw DimensionError("coplay produced the wrong width");
    return back;
}

double FiniteOpenGame::leaf_utility(std::size_t leaf, const StrategyProfile& prof,
                                    const MonoidVector& x, const Continuation& k,
                                    std::size_t s) const {
    if (leaf >= leaves()) throw InputError("leaf index out of range");
    if (s >= leaf_sizes_[leaf]) throw InputError("deviation out of range");
    check_profile(prof);
    check_x(x);
    return utility_(leaf, prof, x, k, s);
}

std::vector<std::size_t> FiniteOpenGame::leaf_best(std::size_t leaf, const StrategyProfile& prof,
                                                   const MonoidVector& x,
                                                   const Continuation& k) const {
    if (leaf >= leaves()) throw InputError("leaf index out of range");
    std::vector<double> u(leaf_sizes_[leaf]);
    for (std::size_t s = 0; s < u.size(); ++s) u[s] = leaf_utility(leaf, prof, x, k, s);
    double top = u.empty() ? 0.0 : u[0];
    for (double v : u) top = std::max(top, v);
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < u.size(); ++s)
        if (u[s] >= top - kArgmaxTolerance) out.push_back(s);
    return out;
}

std::uint64_t FiniteOpenGame::profile_count(std::uint64_t guard) const {
    std::uint64_t count = 1;
    for (std::size_t sz : leaf_sizes_) {
        if (sz == 0) return 0;
        if (count > guard / sz)
            throw BoundError("profile space larger than the guard of " + std::to_string(guard));
        count *= sz;
    }
    return count;
}

StrategyProfile FiniteOpenGame::profile_at(std::uint64_t index) const {
    StrategyProfile prof(leaves());
    for (std::size_t i = 0; i < leaves(); ++i) {
        prof[i] = static_cast<std::size_t>(index % leaf_sizes_[i]);
        index /= leaf_sizes_[i];
    }
    return prof;
}

std::vector<StrategyProfile> FiniteOpenGame::best(const MonoidVector& x, const Continuation& k,
                                                  std::uint64_t guard) const {
    std::uint64_t count = profile_count(guard);
    std::vector<StrategyProfile> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        StrategyProfile prof = profile_at(idx);
        bool stable = true;
        for (std::size_t leaf = 0; stable && leaf < leaves(); ++leaf) {
            double own = leaf_utility(leaf, prof, x, k, prof[leaf]);
            for (std::size_t s = 0; stable && s < leaf_sizes_[leaf]; ++s)
                if (leaf_utility(leaf, prof, x, k, s) > own + kArgmaxTolerance) stable = false;
        }
        if (stable) out.push_back(prof);
    }
    return out;
}

GamePtr lifted_game(MonoidPtr monoid, std::size_t dom, std::size_t cod,
                    FiniteOpenGame::PlayFn play, FiniteOpenGame::CoplayFn coplay) {
    auto utility = [](std::size_t, const StrategyProfile&, const MonoidVector&,
                      const Continuation&, std::size_t) -> double {
        throw InputError("lifted game has no players");
    };
    return std::make_shared<FiniteOpenGame>(dom, cod, std::move(monoid),
                                            std::vector<std::size_t>{}, std::move(play),
                                            std::move(coplay), utility);
}

GamePtr identity_game(MonoidPtr monoid, std::size_t width) {
    auto play = [](const StrategyProfile&, const MonoidVector& x) { return x; };
    auto coplay = [](const StrategyProfile&, const MonoidVector&, const MonoidVector& r) {
        return r;
    };
    return lifted_game(std::move(monoid), width, width, play, coplay);
}

GamePtr game_compose(GamePtr g, GamePtr h) {
    if (!g || !h) throw InputError("cannot compose a null game");
    if (g->cod() != h->dom())
        throw DimensionError("composition mismatch: " + std::to_string(g->cod()) + " vs " +
                             std::to_string(h->dom()));
    if (g->monoid() != h->monoid() && !g->monoid()->same_table(*h->monoid()))
        throw InputError("cannot compose games over different monoids");
    std::size_t left = g->leaves();

    auto play = [g, h, left](const StrategyProfile& prof, const MonoidVector& x) {
        auto [p1, p2] = split_profile(prof, left);
        return h->play(p2, g->play(p1, x));
    };
    auto coplay = [g, h, left](const StrategyProfile& prof, const MonoidVector& x,
                               const MonoidVector& r) {
        auto [p1, p2] = split_profile(prof, left);
        return g->coplay(p1, x, h->coplay(p2, g->play(p1, x), r));
    };
    auto utility = [g, h, left](std::size_t leaf, const StrategyProfile& prof,
                                const MonoidVector& x, const Continuation& k, std::size_t s) {
        auto [p1, p2] = split_profile(prof, left);
        if (leaf < left) {
            // the right half wraps the outer continuation from the left's view
            Continuation inner = [&](const MonoidVector& y) {
                return h->coplay(p2, y, k(h->play(p2, y)));
            };
            return g->leaf_utility(leaf, p1, x, inner, s);
        }
        return h->leaf_utility(leaf - left, p2, g->play(p1, x), k, s);
    };
    return std::make_shared<FiniteOpenGame>(g->dom(), h->cod(), g->monoid(),
                                            concat_sizes(g->leaf_sizes(), h->leaf_sizes()), play,
                                            coplay, utility);
}

GamePtr game_tensor(GamePtr g, GamePtr h) {
    if (!g || !h) throw InputError("cannot tensor a null game");
    if (g->monoid() != h->monoid() && !g->monoid()->same_table(*h->monoid()))
        throw InputError("cannot tensor games over different monoids");
    std::size_t left = g->leaves();
    std::size_t m1 = g->dom();
    std::size_t n1 = g->cod();

    auto play = [g, h, left, m1](const StrategyProfile& prof, const MonoidVector& x) {
        auto [p1, p2] = split_profile(prof, left);
        return mv_concat(g->play(p1, mv_slice(x, 0, m1)),
                         h->play(p2, mv_slice(x, m1, x.width() - m1)));
    };
    auto coplay = [g, h, left, m1, n1](const StrategyProfile& prof, const MonoidVector& x,
                                       const MonoidVector& r) {
        auto [p1, p2] = split_profile(prof, left);
        return mv_concat(g->coplay(p1, mv_slice(x, 0, m1), mv_slice(r, 0, n1)),
                         h->coplay(p2, mv_slice(x, m1, x.width() - m1),
                                   mv_slice(r, n1, r.width() - n1)));
    };
    auto utility = [g, h, left, m1, n1](std::size_t leaf, const StrategyProfile& prof,
                                        const MonoidVector& x, const Continuation& k,
                                        std::size_t s) {
        auto [p1, p2] = split_profile(prof, left);
        MonoidVector x1 = mv_slice(x, 0, m1);
        MonoidVector x2 = mv_slice(x, m1, x.width() - m1);
        if (leaf < left) {
            Continuation inner = [&](const MonoidVector& y1) {
                MonoidVector r = k(mv_concat(y1, h->play(p2, x2)));
                return mv_slice(r, 0, n1);
            };
            return g->leaf_utility(leaf, p1, x1, inner, s);
        }
        Continuation inner = [&](const MonoidVector& y2) {
            MonoidVector r = k(mv_concat(g->play(p1, x1), y2));
            return mv_slice(r, n1, r.width() - n1);
        };
        return h->leaf_utility(leaf - left, p2, x2, inner, s);
    };
    return std::make_shared<FiniteOpenGame>(m1 + h->dom(), n1 + h->cod(), g->monoid(),
                                            concat_sizes(g->leaf_sizes(), h->leaf_sizes()), play,
                                            coplay, utility);
}

} // namespace gg
