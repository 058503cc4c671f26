#include "gg/semantics.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "gg/errors.hpp"

namespace gg {

namespace {

MonoidVector broadcast_of(const MonoidGame& game, const StrategyProfile& prof) {
    MonoidVector v;
    v.elems.reserve(prof.size());
    for (std::size_t s : prof) v.elems.push_back(game.broadcast[s]);
    return v;
}

StrategyProfile translate(const StrategyProfile& b_prof, const std::vector<std::size_t>& map,
                          std::size_t a_leaves) {
    StrategyProfile a_prof(a_leaves);
    for (std::size_t i = 0; i < b_prof.size(); ++i) a_prof[map[i]] = b_prof[i];
    return a_prof;
}

std::string profile_str(const StrategyProfile& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i]);
    }
    return out + "]";
}

// One utility call under a recording continuation; stores the encoded access
// point and returns how often the continuation was consulted.
int probe_access(const FiniteOpenGame& g, std::size_t leaf, const StrategyProfile& prof,
                 const MonoidVector& x, std::size_t s, std::uint64_t& point) {
    int calls = 0;
    const CommMonoid& m = *g.monoid();
    Continuation k = [&](const MonoidVector& y) {
        ++calls;
        point = mv_encode(m, y);
        return mv_unit(m, y.width());
    };
    g.leaf_utility(leaf, prof, x, k, s);
    return calls;
}

} // namespace

GamePtr direct_game_raw(const raw::RawGraph& g, const MonoidGame& game) {
    raw::check_shape(g);
    game.validate();
    MonoidPtr m = game.monoid;

    NatMatrix bt = transpose(g.b);
    NatMatrix dt = transpose(g.d);
    NatMatrix a_sym = add(g.a, transpose(g.a));
    NatMatrix e_sym = add(g.e, transpose(g.e));

    // forward signal; also the point where a deviating vertex consults the
    // continuation
    auto forward = [m, game, bt, dt](const StrategyProfile& prof, const MonoidVector& x) {
        return mv_add(*m, mat_apply(*m, bt, x), mat_apply(*m, dt, broadcast_of(game, prof)));
    };
    auto coplay = [m, game, a_sym, b = g.b, c = g.c](const StrategyProfile& prof,
                                                     const MonoidVector& x, const MonoidVector& r) {
        MonoidVector out = mat_apply(*m, a_sym, x);
        out = mv_add(*m, out, mat_apply(*m, b, r));
        return mv_add(*m, out, mat_apply(*m, c, broadcast_of(game, prof)));
    };
    auto utility = [m, game, forward, c = g.c, d = g.d, e_sym](
                       std::size_t leaf, const StrategyProfile& prof, const MonoidVector& x,
                       const Continuation& k, std::size_t s) {
        StrategyProfile dev = prof;
        dev[leaf] = s;
        CommMonoid::Elem heard = m->unit();
        for (std::size_t i = 0; i < x.width(); ++i)
            heard = m->op(heard, m->scalar_act(c.at(i, leaf), x.elems[i]));
        MonoidVector resp = k(forward(dev, x));
        for (std::size_t j = 0; j < resp.width(); ++j)
            heard = m->op(heard, m->scalar_act(d.at(leaf, j), resp.elems[j]));
        for (std::size_t w = 0; w < dev.size(); ++w)
            heard = m->op(heard, m->scalar_act(e_sym.at(leaf, w), game.broadcast[dev[w]]));
        return game.utility[s][heard];
    };
    return std::make_shared<FiniteOpenGame>(g.m, g.n, m,
                                            std::vector<std::size_t>(g.k, game.strategies()),
                                            forward, coplay, utility);
}

GamePtr direct_game(const OpenGraph& g, const MonoidGame& game) {
    return direct_game_raw(to_raw(g), game);
}

GamePtr compositional_game(const DiagramTerm& t, const MonoidGame& game) {
    switch (t.kind) {
        case TermKind::Seq:
            return game_compose(compositional_game(*t.lhs, game),
                                compositional_game(*t.rhs, game));
        case TermKind::Par:
            return game_tensor(compositional_game(*t.lhs, game), compositional_game(*t.rhs, game));
        default:
            // an atom holds at most one vertex, so its normal form keeps it
            return direct_game(eval(t), game);
    }
}

EqReport games_equal(const FiniteOpenGame& a, const FiniteOpenGame& b,
                     const std::vector<std::size_t>& map, EqOptions opt) {
    auto fail = [](std::string d) { return EqReport{false, std::move(d)}; };

    if (a.dom() != b.dom() || a.cod() != b.cod()) return fail("boundary widths differ");
    if (!a.monoid()->same_table(*b.monoid())) return fail("monoids differ");
    if (a.leaves() != b.leaves()) return fail("player counts differ");
    if (map.size() != b.leaves()) return fail("leaf correspondence has the wrong length");
    std::vector<char> hit(a.leaves(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] >= a.leaves() || hit[map[i]])
            return fail("leaf correspondence is not a bijection");
        hit[map[i]] = 1;
        if (a.leaf_sizes()[map[i]] != b.leaf_sizes()[i])
            return fail("matched leaves have different strategy counts");
    }

    const CommMonoid& m = *a.monoid();
    std::uint64_t xs = mv_space_size(m, a.dom(), opt.state_budget);
    std::uint64_t rs = mv_space_size(m, a.cod(), opt.state_budget);
    std::uint64_t profs = b.profile_count(opt.state_budget);
    auto bounded_mul = [&](std::uint64_t u, std::uint64_t v) {
        if (v != 0 && u > opt.state_budget / v)
            throw BoundError("equivalence sweep exceeds the state budget");
        return u * v;
    };
    bounded_mul(bounded_mul(profs, xs), rs);

    // plays and coplays agree pointwise
    for (std::uint64_t pi = 0; pi < profs; ++pi) {
        StrategyProfile bp = b.profile_at(pi);
        StrategyProfile ap = translate(bp, map, a.leaves());
        for (std::uint64_t xi = 0; xi < xs; ++xi) {
            MonoidVector x = mv_decode(m, a.dom(), xi);
            if (!(a.play(ap, x) == b.play(bp, x)))
                return fail("plays differ at profile " + profile_str(bp) + ", input " +
                            mv_label(m, x));
            for (std::uint64_t ri = 0; ri < rs; ++ri) {
                MonoidVector r = mv_decode(m, a.cod(), ri);
                if (!(a.coplay(ap, x, r) == b.coplay(bp, x, r)))
                    return fail("coplays differ at profile " + profile_str(bp) + ", input " +
                                mv_label(m, x) + ", request " + mv_label(m, r));
            }
        }
    }

    // per-leaf best responses agree under every continuation: tabulate the
    // utilities over all responses at the reachable access points, then
    // compare argmax sets for every joint assignment
    for (std::size_t bleaf = 0; bleaf < b.leaves(); ++bleaf) {
        std::size_t aleaf = map[bleaf];
        std::size_t nstrat = b.leaf_sizes()[bleaf];
        if (nstrat == 0) continue;
        for (std::uint64_t pi = 0; pi < profs; ++pi) {
            StrategyProfile bp = b.profile_at(pi);
            if (bp[bleaf] != 0) continue; // utility ignores the leaf's own entry
            StrategyProfile ap = translate(bp, map, a.leaves());
            for (std::uint64_t xi = 0; xi < xs; ++xi) {
                MonoidVector x = mv_decode(m, a.dom(), xi);
                std::vector<std::uint64_t> points;       // distinct access points
                std::vector<std::size_t> slot(nstrat);   // strategy -> point index
                for (std::size_t s = 0; s < nstrat; ++s) {
                    std::uint64_t pa = 0, pb = 0;
                    int ca = probe_access(a, aleaf, ap, x, s, pa);
                    int cb = probe_access(b, bleaf, bp, x, s, pb);
                    if (ca != 1 || cb != 1)
                        return fail("a utility consulted its continuation " +
                                    std::to_string(ca == 1 ? cb : ca) + " times");
                    if (pa != pb)
                        return fail("utilities consult the continuation at different points "
                                    "(leaf " + std::to_string(bleaf) + ", profile " +
                                    profile_str(bp) + ")");
                    auto at = std::find(points.begin(), points.end(), pa);
                    slot[s] = static_cast<std::size_t>(at - points.begin());
                    if (at == points.end()) points.push_back(pa);
                }
                // responses at one access point are deterministic replays, so
                // a constant continuation answers the right query
                std::vector<std::vector<double>> ua(nstrat, std::vector<double>(rs));
                std::vector<std::vector<double>> ub = ua;
                for (std::size_t s = 0; s < nstrat; ++s)
                    for (std::uint64_t ri = 0; ri < rs; ++ri) {
                        Continuation k = [&](const MonoidVector&) {
                            return mv_decode(m, a.cod(), ri);
                        };
                        ua[s][ri] = a.leaf_utility(aleaf, ap, x, k, s);
                        ub[s][ri] = b.leaf_utility(bleaf, bp, x, k, s);
                    }
                std::uint64_t assignments = 1;
                for (std::size_t q = 0; q < points.size(); ++q) {
                    if (rs != 0 && assignments > opt.kappa_budget / rs)
                        throw BoundError("response assignments exceed the kappa budget");
                    assignments *= rs;
                }
                std::vector<std::uint64_t> resp(points.size());
                for (std::uint64_t ai = 0; ai < assignments; ++ai) {
                    std::uint64_t rest = ai;
                    for (std::size_t q = 0; q < resp.size(); ++q, rest /= rs)
                        resp[q] = rest % rs;
                    auto argmax = [&](const std::vector<std::vector<double>>& u) {
                        double top = u[0][resp[slot[0]]];
                        for (std::size_t s = 1; s < nstrat; ++s)
                            top = std::max(top, u[s][resp[slot[s]]]);
                        std::vector<std::size_t> out;
                        for (std::size_t s = 0; s < nstrat; ++s)
                            if (u[s][resp[slot[s]]] >= top - kArgmaxTolerance) out.push_back(s);
                        return out;
                    };
                    if (argmax(ua) != argmax(ub))
                        return fail("best responses differ at leaf " + std::to_string(bleaf) +
                                    ", profile " + profile_str(bp) + ", input " + mv_label(m, x));
                }
            }
        }
    }

    // spot checks with whole random continuation tables, through best()
    std::mt19937_64 rng(opt.seed);
    for (std::size_t t = 0; t < opt.sample_tables; ++t) {
        std::vector<std::uint64_t> table(rs);
        for (auto& v : table) v = rng() % rs;
        Continuation k = [&](const MonoidVector& y) {
            return mv_decode(m, a.cod(), table[mv_encode(m, y)]);
        };
        for (std::uint64_t xi = 0; xi < xs; ++xi) {
            MonoidVector x = mv_decode(m, a.dom(), xi);
            std::vector<StrategyProfile> ba = a.best(x, k, opt.state_budget);
            std::vector<StrategyProfile> bb = b.best(x, k, opt.state_budget);
            for (auto& prof : bb) prof = translate(prof, map, a.leaves());
            std::sort(ba.begin(), ba.end());
            std::sort(bb.begin(), bb.end());
            if (ba != bb)
                return fail("equilibrium sets differ under a sampled continuation at input " +
                            mv_label(m, x));
        }
    }

    return EqReport{true, ""};
}

std::vector<StrategyProfile> nash_raw(const raw::RawGraph& g, const MonoidGame& game,
                                      std::uint64_t guard) {
    if (g.m != 0 || g.n != 0)
        throw InputError("equilibria need a closed graph, got " + std::to_string(g.m) + " -> " +
                         std::to_string(g.n));
    GamePtr engine = direct_game_raw(g, game);
    Continuation k = [](const MonoidVector& y) { return y; };
    return engine->best(MonoidVector{}, k, guard);
}

std::vector<StrategyProfile> nash(const OpenGraph& g, const MonoidGame& game,
                                  std::uint64_t guard) {
    return nash_raw(to_raw(g), game, guard);
}

Nat recommended_cap(const NatMatrix& sym_adjacency) {
    if (sym_adjacency.rows() != sym_adjacency.cols())
        throw DimensionError("adjacency must be square");
    Nat cap = 1;
    for (std::size_t i = 0; i < sym_adjacency.rows(); ++i) {
        Nat sum = 0;
        for (std::size_t j = 0; j < sym_adjacency.cols(); ++j)
            sum = nat_add(sum, sym_adjacency.at(i, j));
        cap = std::max(cap, sum);
    }
    return cap;
}

} // namespace gg
