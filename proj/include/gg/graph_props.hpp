#pragma once

#include <cstddef>
#include <utility>

#include "gg/open_graph.hpp"

namespace gg {

// Vertex-free open graphs: a connection-count matrix b (m x n) plus an
// adjacency class a on the m left ports.
struct UmatMorphism {
    UmatMorphism(NatMatrix b_, AdjClass a_);

    std::size_t dom() const { return b.rows(); }
    std::size_t cod() const { return b.cols(); }

    NatMatrix b;
    AdjClass a;

    friend bool operator==(const UmatMorphism&, const UmatMorphism&) = default;
};

UmatMorphism umat_identity(std::size_t n);
// Diagrammatic order: g then h. Counts multiply; h's port adjacencies pull
// back along g's connections.
UmatMorphism umat_compose(const UmatMorphism& g, const UmatMorphism& h);
UmatMorphism umat_tensor(const UmatMorphism& g, const UmatMorphism& h);

// Injections m -> m+k whose k extra outputs are born at fresh vertices: a
// permutation of all m+k outputs, with the k vertex rows unordered. The
// canonical representative sorts the vertex rows by target column.
class BoundPerm {
  public:
    BoundPerm(std::size_t m, std::size_t k, PermMatrix p);

    std::size_t dom() const { return m_; }
    std::size_t bound() const { return k_; }
    std::size_t cod() const { return m_ + k_; }
    const PermMatrix& p() const { return p_; }

    friend bool operator==(const BoundPerm&, const BoundPerm&) = default;

  private:
    std::size_t m_, k_;
    PermMatrix p_;
};

BoundPerm bij_identity(std::size_t n);
// g: m -> m+k then h: m+k -> m+k+l gives m -> m+k+l with k+l bound rows.
BoundPerm bij_compose(const BoundPerm& g, const BoundPerm& h);
BoundPerm bij_tensor(const BoundPerm& g, const BoundPerm& h);

// Faithful images inside open graphs.
OpenGraph inject_umat(const UmatMorphism& g);
OpenGraph inject_bij(const BoundPerm& g);

// Every open graph factors as (1_m tensor inject_bij(V)) then inject_umat(W):
// V births the k vertices, W carries all connections.
std::pair<UmatMorphism, BoundPerm> mediator_decompose(const OpenGraph& g);

// Rebuild the factorization inside any prop. The prop supplies its morphism
// type plus identity/compose/tensor (compose in diagrammatic order); f1 and f2
// interpret the two factors. Instantiated at open graphs (round trip) and at
// open games (semantics along the factorization).
template <class Prop, class F1, class F2>
auto mediator_image(const Prop& prop, const OpenGraph& g, F1&& f1, F2&& f2) ->
    typename Prop::Morphism {
    auto [w, v] = mediator_decompose(g);
    auto birth = prop.tensor(prop.identity(g.dom()), f2(v));
    return prop.compose(birth, f1(w));
}

// The open-graph instance of the prop interface.
struct GraphProp {
    using Morphism = OpenGraph;
    std::size_t perm_bound = kDefaultPermBound;
    Morphism identity(std::size_t n) const { return og_identity(n); }
    Morphism compose(const Morphism& g, const Morphism& h) const {
        return og_compose(g, h, perm_bound);
    }
    Morphism tensor(const Morphism& g, const Morphism& h) const {
        return og_tensor(g, h, perm_bound);
    }
    Morphism symmetry(std::size_t m, std::size_t n) const { return og_symmetry(m, n); }
};

} // namespace gg
