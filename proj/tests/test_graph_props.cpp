#include "doctest.h"

#include <random>

#include "gg/graph_props.hpp"
#include "test_util.hpp"

using namespace gg;
using ggtest::rand_mat;
using ggtest::rand_perm;
using ggtest::rand_raw;

namespace {

UmatMorphism rand_umat(std::mt19937_64& rng, std::size_t m, std::size_t n) {
    return UmatMorphism(rand_mat(rng, m, n, 2), adj_class(rand_mat(rng, m, m, 2)));
}

BoundPerm rand_bij(std::mt19937_64& rng, std::size_t m, std::size_t k) {
    return BoundPerm(m, k, rand_perm(rng, m + k));
}

} // namespace

TEST_SUITE("graph_props") {

TEST_CASE("matrix-with-adjacency composition") {
    // counts multiply; the loop on h's port lands on both of g's ports
    UmatMorphism g(NatMatrix{{1}, {1}}, AdjClass::zero(2));
    UmatMorphism h(NatMatrix{{1}}, adj_class(NatMatrix{{1}}));
    UmatMorphism gh = umat_compose(g, h);
    CHECK(gh.b == NatMatrix{{1}, {1}});
    CHECK(gh.a.canon() == NatMatrix{{1, 2}, {0, 1}});

    CHECK(umat_compose(umat_identity(2), g) == g);
    CHECK(umat_compose(g, umat_identity(1)) == g);
}

TEST_CASE("matrix-with-adjacency laws") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        std::size_t m = rng() % 3, n = rng() % 3, p = rng() % 3, q = rng() % 3;
        UmatMorphism f = rand_umat(rng, m, n), g = rand_umat(rng, n, p), h = rand_umat(rng, p, q);
        CHECK(umat_compose(umat_compose(f, g), h) == umat_compose(f, umat_compose(g, h)));
        UmatMorphism f2 = rand_umat(rng, q, m);
        CHECK(umat_tensor(umat_compose(f, g), umat_compose(f2, umat_identity(m))).b ==
              direct_sum(matmul(f.b, g.b), f2.b));
    }
}

TEST_CASE("bound rows are unordered") {
    // same injection written with its two bound rows swapped
    BoundPerm a(1, 2, PermMatrix::from_word({0, 1, 2}));
    BoundPerm b(1, 2, PermMatrix::from_word({0, 2, 1}));
    CHECK(a == b);
    CHECK(a.p().word() == std::vector<std::size_t>{0, 1, 2});

    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        std::size_t m = rng() % 3, k = rng() % 3;
        BoundPerm g = rand_bij(rng, m, k);
        // shuffling the bound rows changes nothing
        std::vector<std::size_t> word = g.p().word();
        PermMatrix sigma = rand_perm(rng, k);
        std::vector<std::size_t> shuffled(word);
        for (std::size_t i = 0; i < k; ++i) shuffled[m + i] = word[m + sigma.word()[i]];
        CHECK(BoundPerm(m, k, PermMatrix::from_word(shuffled)) == g);
    }
}

TEST_CASE("bound permutation composition") {
    BoundPerm g(1, 1, PermMatrix::identity(2));
    BoundPerm h(2, 1, PermMatrix::from_word({2, 0, 1}));
    BoundPerm gh = bij_compose(g, h);
    CHECK(gh.dom() == 1);
    CHECK(gh.bound() == 2);
    CHECK(gh.p().word() == std::vector<std::size_t>{2, 0, 1});

    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        std::size_t m = rng() % 3, k = rng() % 3, l = rng() % 3, j = rng() % 2;
        BoundPerm f = rand_bij(rng, m, k);
        BoundPerm s = rand_bij(rng, m + k, l);
        BoundPerm u = rand_bij(rng, m + k + l, j);
        CHECK(bij_compose(bij_compose(f, s), u) == bij_compose(f, bij_compose(s, u)));
        CHECK(bij_compose(bij_identity(m), f) == f);
        CHECK(bij_compose(f, bij_identity(m + k)) == f);
    }
}

TEST_CASE("injections are homomorphisms") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 150; ++t) {
        std::size_t m = rng() % 3, n = rng() % 3, p = rng() % 3;
        UmatMorphism f = rand_umat(rng, m, n), g = rand_umat(rng, n, p);
        CHECK(og_equal(inject_umat(umat_compose(f, g)),
                       og_compose(inject_umat(f), inject_umat(g))));
        UmatMorphism f2 = rand_umat(rng, p, m);
        CHECK(og_equal(inject_umat(umat_tensor(f, f2)),
                       og_tensor(inject_umat(f), inject_umat(f2))));
        CHECK(og_equal(inject_umat(umat_identity(n)), og_identity(n)));

        std::size_t k = rng() % 2, l = rng() % 2;
        BoundPerm bf = rand_bij(rng, m, k);
        BoundPerm bg = rand_bij(rng, m + k, l);
        CHECK(og_equal(inject_bij(bij_compose(bf, bg)),
                       og_compose(inject_bij(bf), inject_bij(bg))));
        BoundPerm bh = rand_bij(rng, n, l);
        CHECK(og_equal(inject_bij(bij_tensor(bf, bh)),
                       og_tensor(inject_bij(bf), inject_bij(bh))));
        CHECK(og_equal(inject_bij(bij_identity(n)), og_identity(n)));
    }
}

TEST_CASE("vertex births followed by wiring rebuild any graph") {
    std::mt19937_64 rng(45);
    GraphProp prop;
    auto f1 = [](const UmatMorphism& w) { return inject_umat(w); };
    auto f2 = [](const BoundPerm& v) { return inject_bij(v); };
    for (int t = 0; t < 150; ++t) {
        OpenGraph g = canonicalize(rand_raw(rng, rng() % 3, rng() % 3, 3, 2));
        CHECK(og_equal(mediator_image(prop, g, f1, f2), g));
    }

    // vertex-free graphs decompose trivially
    OpenGraph flat = canonicalize(rand_raw(rng, 2, 2, 0, 2));
    auto [w, v] = mediator_decompose(flat);
    CHECK(v.bound() == 0);
    CHECK(w.b == flat.b());
    CHECK(w.a == flat.a());
}

} // TEST_SUITE
