#pragma once

#include "gg/natmat.hpp"

namespace gg {

// Adjacency matrices of an undirected multigraph, up to the orientation of each
// edge: A and A' name the same graph iff A + A^T == A' + A'^T. The stored
// canonical form keeps the diagonal and folds each off-diagonal pair into the
// upper triangle.
class AdjClass {
  public:
    explicit AdjClass(const NatMatrix& rep);
    static AdjClass zero(std::size_t dim);

    std::size_t dim() const { return canon_.rows(); }
    const NatMatrix& canon() const { return canon_; }

    friend bool operator==(const AdjClass&, const AdjClass&) = default;

  private:
    NatMatrix canon_;
};

AdjClass adj_class(const NatMatrix& rep);

// canon + canon^T; diagonal entries double (a self-loop touches its vertex twice).
NatMatrix symmetrize(const AdjClass& c);

// Class of P * rep * P^T; well defined because conjugation commutes with (+)^T.
AdjClass conjugate(const AdjClass& c, const PermMatrix& p);

} // namespace gg
