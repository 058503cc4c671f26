#include "doctest.h"

#include <algorithm>
#include <random>

#include "gg/adjclass.hpp"

using namespace gg;

namespace {

NatMatrix rand_square(std::mt19937_64& rng, std::size_t n, Nat max_entry) {
    NatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, rng() % (max_entry + 1));
    return m;
}

std::vector<Nat> degree_multiset(const AdjClass& c) {
    NatMatrix s = symmetrize(c);
    std::vector<Nat> degs;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        Nat d = 0;
        for (std::size_t j = 0; j < c.dim(); ++j) d += s.at(i, j);
        degs.push_back(d);
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

} // namespace

TEST_SUITE("adjclass") {

TEST_CASE("orientation of an edge does not matter") {
    // one undirected edge, written three ways
    AdjClass both_ways(NatMatrix{{0, 1}, {1, 0}});
    AdjClass one_way_twice(NatMatrix{{0, 2}, {0, 0}});
    CHECK(both_ways == one_way_twice);
    CHECK(both_ways.canon() == NatMatrix{{0, 2}, {0, 0}});
    CHECK(one_way_twice.canon() == NatMatrix{{0, 2}, {0, 0}});

    CHECK(adj_class(NatMatrix{{0, 1}, {0, 0}}) == adj_class(NatMatrix{{0, 0}, {1, 0}}));
    CHECK(adj_class(NatMatrix{{0, 1}, {0, 0}}) != both_ways);
}

TEST_CASE("class equality is exactly A + A^T equality") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 300; ++t) {
        std::size_t n = rng() % 4;
        NatMatrix a = rand_square(rng, n, 2), b = rand_square(rng, n, 2);
        bool same_sym = add(a, transpose(a)) == add(b, transpose(b));
        CHECK((adj_class(a) == adj_class(b)) == same_sym);
        // canonicalization is idempotent
        CHECK(adj_class(adj_class(a).canon()) == adj_class(a));
    }
}

TEST_CASE("symmetrize doubles the diagonal") {
    AdjClass c(NatMatrix{{1, 1}, {0, 0}});
    CHECK(c.canon() == NatMatrix{{1, 1}, {0, 0}});
    CHECK(symmetrize(c) == NatMatrix{{2, 1}, {1, 0}});

    std::mt19937_64 rng(22);
    for (int t = 0; t < 100; ++t) {
        NatMatrix a = rand_square(rng, 1 + rng() % 3, 2);
        CHECK(symmetrize(adj_class(a)) == add(a, transpose(a)));
    }
}

TEST_CASE("zero class and empty dimension") {
    CHECK(AdjClass::zero(0).dim() == 0);
    CHECK(AdjClass::zero(3).canon() == NatMatrix(3, 3));
    CHECK(adj_class(NatMatrix(0, 0)) == AdjClass::zero(0));
    CHECK_THROWS_AS(adj_class(NatMatrix(2, 3)), DimensionError);
}

TEST_CASE("conjugation relabels vertices") {
    // path 0-1-2 relabeled by rotating vertex names
    AdjClass path(NatMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    PermMatrix rot = PermMatrix::from_word({2, 0, 1});
    AdjClass moved = conjugate(path, rot);
    // new vertex i is old vertex word[i] = {2,0,1}: old edges (0,1),(1,2)
    // become (1,2),(2,0), i.e. vertex 2 (old 1) keeps both edges
    CHECK(moved.canon() == NatMatrix{{0, 0, 1}, {0, 0, 1}, {0, 0, 0}});

    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = rng() % 5;
        AdjClass c = adj_class(rand_square(rng, n, 2));
        auto perms = all_permutations(n);
        PermMatrix p = perms[rng() % perms.size()];
        AdjClass moved2 = conjugate(c, p);
        CHECK(degree_multiset(moved2) == degree_multiset(c));
        // conjugating by p then by p^-1 restores the class
        PermMatrix pinv(transpose(p.matrix()));
        CHECK(conjugate(moved2, pinv) == c);
    }
    CHECK_THROWS_AS(conjugate(path, PermMatrix::identity(2)), DimensionError);
}

} // TEST_SUITE
