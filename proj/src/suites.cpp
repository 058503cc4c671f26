#include "gg/suites.hpp"

#include <functional>
#include <random>
#include <utility>

#include "gg/diagram.hpp"
#include "gg/errors.hpp"
#include "gg/graph_props.hpp"
#include "gg/semantics.hpp"

namespace gg {

namespace {

NatMatrix rand_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, Nat max_entry) {
    NatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() % (max_entry + 1));
    return m;
}

raw::RawGraph rand_raw(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t max_k,
                       Nat max_entry) {
    std::size_t k = rng() % (max_k + 1);
    return raw::RawGraph{m,
                         n,
                         k,
                         rand_mat(rng, m, m, max_entry),
                         rand_mat(rng, m, n, max_entry),
                         rand_mat(rng, m, k, max_entry),
                         rand_mat(rng, k, n, max_entry),
                         rand_mat(rng, k, k, max_entry)};
}

PermMatrix rand_perm(std::mt19937_64& rng, std::size_t k) {
    std::vector<std::size_t> word(k);
    for (std::size_t i = 0; i < k; ++i) word[i] = i;
    for (std::size_t i = k; i > 1; --i) std::swap(word[i - 1], word[rng() % i]);
    return PermMatrix::from_word(word);
}

OpenGraph rand_graph(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t max_k,
                     std::size_t perm_bound) {
    return canonicalize(rand_raw(rng, m, n, max_k, 2), perm_bound);
}

UmatMorphism rand_umat(std::mt19937_64& rng, std::size_t a, std::size_t b) {
    return UmatMorphism(rand_mat(rng, a, b, 2), adj_class(rand_mat(rng, a, a, 2)));
}

CheckResult run_family(const std::string& name, std::uint64_t seed, std::size_t instances,
                       const std::function<bool(std::mt19937_64&, std::string&)>& one) {
    std::mt19937_64 rng(seed);
    try {
        for (std::size_t i = 0; i < instances; ++i) {
            std::string detail;
            if (!one(rng, detail))
                return {name, false, "instance " + std::to_string(i) + ": " + detail};
        }
    } catch (const Error& e) {
        return {name, false, e.what()};
    }
    return {name, true, ""};
}

} // namespace

std::vector<CheckResult> axiom_suite(std::size_t perm_bound) {
    std::vector<CheckResult> out;
    for (const AxiomFixture& ax : axiom_fixtures()) {
        CheckResult row{std::string(ax.name), false, ""};
        try {
            OpenGraph l = eval(*parse_term(ax.lhs), perm_bound);
            OpenGraph r = eval(*parse_term(ax.rhs), perm_bound);
            row.pass = og_equal(l, r);
            if (!row.pass) row.detail = "sides normalize differently";
        } catch (const Error& e) {
            row.detail = e.what();
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<CheckResult> prop_law_suite(std::uint64_t seed, std::size_t instances,
                                        std::size_t perm_bound) {
    std::vector<CheckResult> out;

    out.push_back(run_family(
        "normal forms ignore vertex labels", seed + 1, instances,
        [&](std::mt19937_64& rng, std::string& detail) {
            raw::RawGraph g = rand_raw(rng, rng() % 3, rng() % 3, 2, 2);
            raw::RawGraph h = rand_raw(rng, g.n, rng() % 3, 2, 2);
            raw::RawGraph gp = raw::permute_vertices(g, rand_perm(rng, g.k));
            raw::RawGraph hp = raw::permute_vertices(h, rand_perm(rng, h.k));
            if (!(canonicalize(raw::compose(g, h), perm_bound) ==
                  canonicalize(raw::compose(gp, hp), perm_bound))) {
                detail = "composition moved under relabeling";
                return false;
            }
            if (!(canonicalize(raw::tensor(g, h), perm_bound) ==
                  canonicalize(raw::tensor(gp, hp), perm_bound))) {
                detail = "tensor moved under relabeling";
                return false;
            }
            return true;
        }));

    out.push_back(run_family(
        "composition is associative and unital", seed + 2, instances,
        [&](std::mt19937_64& rng, std::string& detail) {
            std::size_t a = rng() % 3, b = rng() % 3, c = rng() % 3, d = rng() % 3;
            OpenGraph f = rand_graph(rng, a, b, 2, perm_bound);
            OpenGraph g = rand_graph(rng, b, c, 2, perm_bound);
            OpenGraph h = rand_graph(rng, c, d, 2, perm_bound);
            if (!og_equal(og_compose(og_compose(f, g, perm_bound), h, perm_bound),
                          og_compose(f, og_compose(g, h, perm_bound), perm_bound))) {
                detail = "associativity failed";
                return false;
            }
            if (!og_equal(og_compose(og_identity(a), f, perm_bound), f) ||
                !og_equal(og_compose(f, og_identity(b), perm_bound), f)) {
                detail = "identity failed";
                return false;
            }
            return true;
        }));

    out.push_back(run_family(
        "tensor interchanges with composition", seed + 3, instances,
        [&](std::mt19937_64& rng, std::string& detail) {
            std::size_t a = rng() % 3, b = rng() % 3, c = rng() % 3;
            std::size_t d = rng() % 3, e = rng() % 3, z = rng() % 3;
            OpenGraph f = rand_graph(rng, a, b, 1, perm_bound);
            OpenGraph p = rand_graph(rng, b, c, 1, perm_bound);
            OpenGraph g = rand_graph(rng, d, e, 1, perm_bound);
            OpenGraph q = rand_graph(rng, e, z, 1, perm_bound);
            if (!og_equal(og_compose(og_tensor(f, g, perm_bound), og_tensor(p, q, perm_bound),
                                     perm_bound),
                          og_tensor(og_compose(f, p, perm_bound), og_compose(g, q, perm_bound),
                                    perm_bound))) {
                detail = "interchange failed";
                return false;
            }
            return true;
        }));

    out.push_back(run_family(
        "symmetries swap wires coherently", seed + 4, instances,
        [&](std::mt19937_64& rng, std::string& detail) {
            std::size_t m = rng() % 3, n = rng() % 3, p = rng() % 3;
            if (!og_equal(og_compose(og_symmetry(m, n), og_symmetry(n, m), perm_bound),
                          og_identity(m + n))) {
                detail = "not self-inverse";
                return false;
            }
            OpenGraph f = rand_graph(rng, m, n, 1, perm_bound);
            OpenGraph g = rand_graph(rng, p, rng() % 3, 1, perm_bound);
            if (!og_equal(og_compose(og_tensor(f, g, perm_bound),
                                     og_symmetry(f.cod(), g.cod()), perm_bound),
                          og_compose(og_symmetry(f.dom(), g.dom()), og_tensor(g, f, perm_bound),
                                     perm_bound))) {
                detail = "naturality failed";
                return false;
            }
            if (!og_equal(og_symmetry(m, n + p),
                          og_compose(og_tensor(og_symmetry(m, n), og_identity(p), perm_bound),
                                     og_tensor(og_identity(n), og_symmetry(m, p), perm_bound),
                                     perm_bound))) {
                detail = "hexagon failed";
                return false;
            }
            return true;
        }));

    out.push_back(run_family(
        "bound rows are unordered and compose", seed + 5, instances,
        [&](std::mt19937_64& rng, std::string& detail) {
            std::size_t m = rng() % 3, k = rng() % 3, l = rng() % 3, j = rng() % 2;
            std::vector<std::size_t> word = rand_perm(rng, m + k).word();
            BoundPerm g(m, k, PermMatrix::from_word(word));
            std::vector<std::size_t> shuffled = word;
            PermMatrix sigma = rand_perm(rng, k);
            for (std::size_t i = 0; i < k; ++i) shuffled[m + i] = word[m + sigma.word()[i]];
            if (!(g == BoundPerm(m, k, PermMatrix::from_word(shuffled)))) {
                detail = "bound rows were ordered";
                return false;
            }
            BoundPerm h(m + k, l, rand_perm(rng, m + k + l));
            BoundPerm i(m + k + l, j, rand_perm(rng, m + k + l + j));
            if (!(bij_compose(bij_compose(g, h), i) == bij_compose(g, bij_compose(h, i)))) {
                detail = "associativity failed";
                return false;
            }
            if (!(bij_compose(bij_identity(m), g) == g) ||
                !(bij_compose(g, bij_identity(m + k)) == g)) {
                detail = "identity failed";
                return false;
            }
            return true;
        }));

    out.push_back(run_family(
        "injections preserve structure", seed + 6, instances,
        [&](std::mt19937_64& rng, std::string& detail) {
            std::size_t a = rng() % 3, b = rng() % 3, c = rng() % 3;
            UmatMorphism u1 = rand_umat(rng, a, b);
            UmatMorphism u2 = rand_umat(rng, b, c);
            UmatMorphism u3 = rand_umat(rng, rng() % 3, rng() % 3);
            if (!og_equal(inject_umat(umat_compose(u1, u2)),
                          og_compose(inject_umat(u1), inject_umat(u2), perm_bound))) {
                detail = "matrix composition not preserved";
                return false;
            }
            if (!og_equal(inject_umat(umat_tensor(u1, u3)),
                          og_tensor(inject_umat(u1), inject_umat(u3), perm_bound))) {
                detail = "matrix tensor not preserved";
                return false;
            }
            if (!og_equal(inject_umat(umat_identity(a)), og_identity(a))) {
                detail = "matrix identity not preserved";
                return false;
            }
            std::size_t m = rng() % 2, k = rng() % 2, l = rng() % 2;
            std::size_t m2 = rng() % 2, k2 = rng() % 2;
            BoundPerm g(m, k, rand_perm(rng, m + k));
            BoundPerm h(m + k, l, rand_perm(rng, m + k + l));
            BoundPerm t(m2, k2, rand_perm(rng, m2 + k2));
            if (!og_equal(inject_bij(bij_compose(g, h)),
                          og_compose(inject_bij(g), inject_bij(h), perm_bound))) {
                detail = "injection composition not preserved";
                return false;
            }
            if (!og_equal(inject_bij(bij_tensor(g, t)),
                          og_tensor(inject_bij(g), inject_bij(t), perm_bound))) {
                detail = "injection tensor not preserved";
                return false;
            }
            if (!og_equal(inject_bij(bij_identity(m)), og_identity(m))) {
                detail = "injection identity not preserved";
                return false;
            }
            return true;
        }));

    out.push_back(run_family(
        "every graph factors through its vertices", seed + 7, instances,
        [&](std::mt19937_64& rng, std::string& detail) {
            GraphProp prop{perm_bound};
            OpenGraph g = rand_graph(rng, rng() % 3, rng() % 3, 3, perm_bound);
            OpenGraph back = mediator_image(
                prop, g, [](const UmatMorphism& w) { return inject_umat(w); },
                [](const BoundPerm& v) { return inject_bij(v); });
            if (!og_equal(back, g)) {
                detail = "factorization did not rebuild the graph";
                return false;
            }
            return true;
        }));

    return out;
}

namespace {

TermPtr atom_with_dom(std::mt19937_64& rng, std::size_t dom) {
    switch (dom) {
        case 0:
            return rng() % 2 ? make_atom(TermKind::Unit) : make_atom(TermKind::Vertex);
        case 1:
            switch (rng() % 3) {
                case 0: return make_atom(TermKind::Comult);
                case 1: return make_atom(TermKind::Counit);
                default: return make_atom(TermKind::Id, 1);
            }
        case 2:
            switch (rng() % 4) {
                case 0: return make_atom(TermKind::Mult);
                case 1: return make_atom(TermKind::Cup);
                case 2: return make_atom(TermKind::Swap, 1, 1);
                default: return make_atom(TermKind::Id, 2);
            }
        default:
            return nullptr;
    }
}

TermPtr narrow_atom(std::mt19937_64& rng) {
    switch (rng() % 4) {
        case 0: return make_atom(TermKind::Unit);
        case 1: return make_atom(TermKind::Counit);
        case 2: return make_atom(TermKind::Vertex);
        default: return make_atom(TermKind::Id, 1);
    }
}

// Grows seq/par chains of atoms, keeping boundaries at width two or less and
// at most three vertices so the equivalence sweep stays small.
TermPtr random_term(std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        TermPtr t = atom_with_dom(rng, rng() % 3);
        std::size_t steps = 1 + rng() % 4;
        bool ok = true;
        for (std::size_t i = 0; i < steps && ok; ++i) {
            if (rng() % 2) {
                TermPtr next = atom_with_dom(rng, t->cod);
                if (!next) {
                    ok = false;
                    break;
                }
                t = make_seq(t, next);
            } else {
                TermPtr next = narrow_atom(rng);
                t = rng() % 2 ? make_par(t, next) : make_par(next, t);
            }
            if (t->dom > 2 || t->cod > 2 || leaf_count(*t) > 3) ok = false;
        }
        if (ok) return t;
    }
    return make_seq(make_atom(TermKind::Vertex), make_atom(TermKind::Counit));
}

CheckResult functor_row(const std::string& name, const DiagramTerm& t, const MonoidGame& game) {
    try {
        TrackedEval tr = eval_tracked(t);
        GamePtr dg = direct_game(tr.graph, game);
        GamePtr cg = compositional_game(t, game);
        EqReport rep = games_equal(*dg, *cg, tr.vertex_of_leaf);
        return {name, rep.equal, rep.detail};
    } catch (const Error& e) {
        return {name, false, e.what()};
    }
}

} // namespace

std::vector<CheckResult> functor_suite(std::uint64_t seed, std::size_t random_terms) {
    MonoidGame game = majority_game(2);
    std::vector<CheckResult> out;

    const char* generators[] = {"mult", "unit",  "comult", "counit",    "cup",
                                "vertex", "id(1)", "id(2)",  "swap(1,1)", "swap(2,1)"};
    for (const char* src : generators)
        out.push_back(functor_row(std::string("generator ") + src, *parse_term(src), game));

    for (const AxiomFixture& ax : axiom_fixtures()) {
        out.push_back(
            functor_row(std::string(ax.name) + " (lhs)", *parse_term(ax.lhs), game));
        out.push_back(
            functor_row(std::string(ax.name) + " (rhs)", *parse_term(ax.rhs), game));
    }

    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_terms; ++i) {
        TermPtr t = random_term(rng);
        out.push_back(
            functor_row("random " + std::to_string(i) + ": " + term_to_string(*t), *t, game));
    }
    return out;
}

} // namespace gg
