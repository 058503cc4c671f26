#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gg/natmat.hpp"

namespace gg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // diagnosis on failure, empty otherwise
};

// One row per wiring axiom: both sides must evaluate to the same normal form.
std::vector<CheckResult> axiom_suite(std::size_t perm_bound = kDefaultPermBound);

// Seeded randomized law checks for graphs, their injections and the
// factorization. One row per law family; each runs `instances` random cases
// and reports the first failure.
std::vector<CheckResult> prop_law_suite(std::uint64_t seed, std::size_t instances = 500,
                                        std::size_t perm_bound = kDefaultPermBound);

// Direct versus compositional semantics across the term corpus: every
// generator, both sides of every axiom, and seeded random terms, one row per
// term, all under the two-strategy majority stage game.
std::vector<CheckResult> functor_suite(std::uint64_t seed, std::size_t random_terms = 20);

} // namespace gg
