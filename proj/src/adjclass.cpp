#include "gg/adjclass.hpp"

namespace gg {

AdjClass::AdjClass(const NatMatrix& rep) {
    if (rep.rows() != rep.cols())
        throw DimensionError("adjacency representative must be square, got " +
                             std::to_string(rep.rows()) + "x" + std::to_string(rep.cols()));
    std::size_t n = rep.rows();
    canon_ = NatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        canon_.set(i, i, rep.at(i, i));
        for (std::size_t j = i + 1; j < n; ++j)
            canon_.set(i, j, nat_add(rep.at(i, j), rep.at(j, i)));
    }
}

AdjClass AdjClass::zero(std::size_t dim) { return AdjClass(NatMatrix(dim, dim)); }

AdjClass adj_class(const NatMatrix& rep) { return AdjClass(rep); }

NatMatrix symmetrize(const AdjClass& c) {
    std::size_t n = c.dim();
    NatMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        s.set(i, i, nat_add(c.canon().at(i, i), c.canon().at(i, i)));
        for (std::size_t j = i + 1; j < n; ++j) {
            s.set(i, j, c.canon().at(i, j));
            s.set(j, i, c.canon().at(i, j));
        }
    }
    return s;
}

AdjClass conjugate(const AdjClass& c, const PermMatrix& p) {
    if (p.dim() != c.dim())
        throw DimensionError("conjugate: permutation dim " + std::to_string(p.dim()) +
                             " vs class dim " + std::to_string(c.dim()));
    return adj_class(matmul(matmul(p.matrix(), c.canon()), transpose(p.matrix())));
}

} // namespace gg
