#pragma once

#include <random>

#include "gg/open_graph.hpp"

namespace ggtest {

using namespace gg;

inline NatMatrix rand_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, Nat max_entry) {
    NatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, rng() % (max_entry + 1));
    return m;
}

inline raw::RawGraph rand_raw(std::mt19937_64& rng, std::size_t m, std::size_t n,
                              std::size_t max_k, Nat max_entry) {
    std::size_t k = rng() % (max_k + 1);
    return raw::RawGraph{m, n, k,
                         rand_mat(rng, m, m, max_entry), rand_mat(rng, m, n, max_entry),
                         rand_mat(rng, m, k, max_entry), rand_mat(rng, k, n, max_entry),
                         rand_mat(rng, k, k, max_entry)};
}

inline PermMatrix rand_perm(std::mt19937_64& rng, std::size_t k) {
    auto perms = all_permutations(k);
    return perms[rng() % perms.size()];
}

} // namespace ggtest
