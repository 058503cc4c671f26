#include "gg/graph_props.hpp"

#include <algorithm>
#include <numeric>

namespace gg {

UmatMorphism::UmatMorphism(NatMatrix b_, AdjClass a_) : b(std::move(b_)), a(std::move(a_)) {
    if (a.dim() != b.rows())
        throw DimensionError("port adjacency dim " + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.rows()) + " ports");
}

UmatMorphism umat_identity(std::size_t n) {
    return UmatMorphism(NatMatrix::identity(n), AdjClass::zero(n));
}

UmatMorphism umat_compose(const UmatMorphism& g, const UmatMorphism& h) {
    if (g.cod() != h.dom())
        throw DimensionError("compose: boundary mismatch " + std::to_string(g.cod()) +
                             " vs " + std::to_string(h.dom()));
    NatMatrix b = matmul(g.b, h.b);
    AdjClass a = adj_class(add(g.a.canon(), matmul(matmul(g.b, h.a.canon()), transpose(g.b))));
    return UmatMorphism(std::move(b), std::move(a));
}

UmatMorphism umat_tensor(const UmatMorphism& g, const UmatMorphism& h) {
    return UmatMorphism(direct_sum(g.b, h.b),
                        adj_class(direct_sum(g.a.canon(), h.a.canon())));
}

BoundPerm::BoundPerm(std::size_t m, std::size_t k, PermMatrix p) : m_(m), k_(k), p_(std::move(p)) {
    if (p_.dim() != m_ + k_)
        throw DimensionError("bound permutation dim " + std::to_string(p_.dim()) +
                             " vs " + std::to_string(m_) + "+" + std::to_string(k_));
    // Canonical representative: the k bound rows sorted by target column.
    std::vector<std::size_t> word = p_.word();
    std::sort(word.begin() + static_cast<std::ptrdiff_t>(m_), word.end());
    p_ = PermMatrix::from_word(word);
}

BoundPerm bij_identity(std::size_t n) {
    return BoundPerm(n, 0, PermMatrix::identity(n));
}

BoundPerm bij_compose(const BoundPerm& g, const BoundPerm& h) {
    if (g.cod() != h.dom())
        throw DimensionError("compose: boundary mismatch " + std::to_string(g.cod()) +
                             " vs " + std::to_string(h.dom()));
    std::size_t l = h.bound();
    NatMatrix p = matmul(direct_sum(g.p().matrix(), NatMatrix::identity(l)),
                         h.p().matrix());
    return BoundPerm(g.dom(), g.bound() + l, PermMatrix(p));
}

BoundPerm bij_tensor(const BoundPerm& g, const BoundPerm& h) {
    // Interleave (g ports, g bound | h ports, h bound) into
    // (g ports, h ports, g bound, h bound) before the summed permutation.
    std::size_t m = g.dom(), k = g.bound(), m2 = h.dom(), k2 = h.bound();
    std::vector<std::size_t> word;
    word.reserve(m + k + m2 + k2);
    for (std::size_t i = 0; i < m; ++i) word.push_back(i);
    for (std::size_t i = 0; i < m2; ++i) word.push_back(m + k + i);
    for (std::size_t i = 0; i < k; ++i) word.push_back(m + i);
    for (std::size_t i = 0; i < k2; ++i) word.push_back(m + k + m2 + i);
    NatMatrix p = matmul(PermMatrix::from_word(word).matrix(),
                         direct_sum(g.p().matrix(), h.p().matrix()));
    return BoundPerm(m + m2, k + k2, PermMatrix(p));
}

OpenGraph inject_umat(const UmatMorphism& g) {
    return OpenGraph(g.dom(), g.cod(), 0, g.a, g.b,
                     NatMatrix(g.dom(), 0), NatMatrix(0, g.cod()), AdjClass::zero(0));
}

OpenGraph inject_bij(const BoundPerm& g) {
    std::size_t m = g.dom(), k = g.bound();
    const NatMatrix& p = g.p().matrix();
    NatMatrix b(m, m + k), d(k, m + k);
    for (std::size_t j = 0; j < m + k; ++j) {
        for (std::size_t i = 0; i < m; ++i) b.set(i, j, p.at(i, j));
        for (std::size_t i = 0; i < k; ++i) d.set(i, j, p.at(m + i, j));
    }
    return OpenGraph(m, m + k, k, AdjClass::zero(m), std::move(b),
                     NatMatrix(m, k), std::move(d), AdjClass::zero(k));
}

std::pair<UmatMorphism, BoundPerm> mediator_decompose(const OpenGraph& g) {
    NatMatrix w_b = stack_v(g.b(), g.d());
    NatMatrix w_a = block2(g.a().canon(), g.c(),
                           NatMatrix(g.vertices(), g.dom()), g.e().canon());
    UmatMorphism w(std::move(w_b), adj_class(w_a));
    BoundPerm v(0, g.vertices(), PermMatrix::identity(g.vertices()));
    return {std::move(w), std::move(v)};
}

} // namespace gg
