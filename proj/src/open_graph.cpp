#include "gg/open_graph.hpp"

#include <algorithm>
#include <numeric>

namespace gg {

namespace raw {

void check_shape(const RawGraph& g) {
    if (g.a.rows() != g.m || g.a.cols() != g.m) throw DimensionError("raw graph: a must be m x m");
    if (g.b.rows() != g.m || g.b.cols() != g.n) throw DimensionError("raw graph: b must be m x n");
    if (g.c.rows() != g.m || g.c.cols() != g.k) throw DimensionError("raw graph: c must be m x k");
    if (g.d.rows() != g.k || g.d.cols() != g.n) throw DimensionError("raw graph: d must be k x n");
    if (g.e.rows() != g.k || g.e.cols() != g.k) throw DimensionError("raw graph: e must be k x k");
}

RawGraph identity(std::size_t n) {
    return RawGraph{n, n, 0, NatMatrix(n, n), NatMatrix::identity(n),
                    NatMatrix(n, 0), NatMatrix(0, n), NatMatrix(0, 0)};
}

RawGraph symmetry(std::size_t m, std::size_t n) {
    NatMatrix b = block2(NatMatrix(m, n), NatMatrix::identity(m),
                         NatMatrix::identity(n), NatMatrix(n, m));
    return RawGraph{m + n, n + m, 0, NatMatrix(m + n, m + n), std::move(b),
                    NatMatrix(m + n, 0), NatMatrix(0, n + m), NatMatrix(0, 0)};
}

RawGraph compose(const RawGraph& g, const RawGraph& h) {
    check_shape(g);
    check_shape(h);
    if (g.n != h.m)
        throw DimensionError("compose: boundary mismatch " + std::to_string(g.n) +
                             " vs " + std::to_string(h.m));
    // Plugging h's left ports onto g's right ports. Connections that cross the
    // shared boundary pick up h's port adjacencies; those are symmetrized
    // where both endpoints came through b or d, because edge orientation is
    // free but each undirected port-port edge must be counted once per side.
    NatMatrix sym_ha = add(h.a, transpose(h.a));
    RawGraph r;
    r.m = g.m;
    r.n = h.n;
    r.k = g.k + h.k;
    r.a = add(g.a, matmul(matmul(g.b, h.a), transpose(g.b)));
    r.b = matmul(g.b, h.b);
    r.c = stack_h(add(g.c, matmul(matmul(g.b, sym_ha), transpose(g.d))),
                  matmul(g.b, h.c));
    r.d = stack_v(matmul(g.d, h.b), h.d);
    r.e = block2(add(g.e, matmul(matmul(g.d, h.a), transpose(g.d))), matmul(g.d, h.c),
                 NatMatrix(h.k, g.k), h.e);
    return r;
}

RawGraph tensor(const RawGraph& g, const RawGraph& h) {
    check_shape(g);
    check_shape(h);
    return RawGraph{g.m + h.m, g.n + h.n, g.k + h.k,
                    direct_sum(g.a, h.a), direct_sum(g.b, h.b), direct_sum(g.c, h.c),
                    direct_sum(g.d, h.d), direct_sum(g.e, h.e)};
}

RawGraph permute_vertices(const RawGraph& g, const PermMatrix& p) {
    if (p.dim() != g.k) throw DimensionError("permute_vertices: wrong dim");
    const NatMatrix& pm = p.matrix();
    return RawGraph{g.m, g.n, g.k, g.a, g.b,
                    matmul(g.c, transpose(pm)), matmul(pm, g.d),
                    matmul(matmul(pm, g.e), transpose(pm))};
}

} // namespace raw

CanonTracked canonicalize_tracked(const raw::RawGraph& g, std::size_t perm_bound) {
    raw::check_shape(g);
    if (g.k > perm_bound)
        throw BoundError("normal form search over " + std::to_string(g.k) +
                         " vertices exceeds bound " + std::to_string(perm_bound));

    AdjClass e_class = adj_class(g.e);
    NatMatrix sym_e = symmetrize(e_class);
    const NatMatrix& e_canon = e_class.canon();
    const std::size_t k = g.k, m = g.m, n = g.n;

    // Serialization of a candidate vertex order w: E canon rows, then D rows,
    // then C rows, all row-major. Lexicographically least wins.
    auto serialize = [&](const std::vector<std::size_t>& w, std::vector<Nat>& out) {
        out.clear();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (i == j) out.push_back(e_canon.at(w[i], w[i]));
                else if (i < j) out.push_back(sym_e.at(w[i], w[j]));
                else out.push_back(0);
            }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) out.push_back(g.d.at(w[i], j));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j) out.push_back(g.c.at(i, w[j]));
    };

    std::vector<std::size_t> word(k), best_word(k);
    std::iota(word.begin(), word.end(), 0);
    best_word = word;
    std::vector<Nat> cur, best;
    serialize(best_word, best);
    while (std::next_permutation(word.begin(), word.end())) {
        serialize(word, cur);
        if (cur < best) {
            best.swap(cur);
            best_word = word;
        }
    }

    NatMatrix ec(k, k), dd(k, n), cc(m, k);
    {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) ec.set(i, j, best[idx++]);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) dd.set(i, j, best[idx++]);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j) cc.set(i, j, best[idx++]);
    }

    std::vector<std::size_t> new_of_old(k);
    for (std::size_t i = 0; i < k; ++i) new_of_old[best_word[i]] = i;

    OpenGraph graph(OpenGraph::Canonical{}, m, n, k,
                    adj_class(g.a), g.b, std::move(cc), std::move(dd), adj_class(ec));
    return CanonTracked{std::move(graph), std::move(new_of_old)};
}

OpenGraph::OpenGraph(std::size_t m, std::size_t n, std::size_t k,
                     AdjClass a, NatMatrix b, NatMatrix c, NatMatrix d, AdjClass e,
                     std::size_t perm_bound)
    : OpenGraph(canonicalize_tracked(
          raw::RawGraph{m, n, k, a.canon(), std::move(b), std::move(c), std::move(d), e.canon()},
          perm_bound).graph) {}

OpenGraph canonicalize(const raw::RawGraph& g, std::size_t perm_bound) {
    return canonicalize_tracked(g, perm_bound).graph;
}

raw::RawGraph to_raw(const OpenGraph& g) {
    return raw::RawGraph{g.dom(), g.cod(), g.vertices(),
                         g.a().canon(), g.b(), g.c(), g.d(), g.e().canon()};
}

OpenGraph og_identity(std::size_t n) {
    return canonicalize(raw::identity(n));
}

OpenGraph og_symmetry(std::size_t m, std::size_t n) {
    return canonicalize(raw::symmetry(m, n));
}

OpenGraph og_compose(const OpenGraph& g, const OpenGraph& h, std::size_t perm_bound) {
    return canonicalize(raw::compose(to_raw(g), to_raw(h)), perm_bound);
}

OpenGraph og_tensor(const OpenGraph& g, const OpenGraph& h, std::size_t perm_bound) {
    return canonicalize(raw::tensor(to_raw(g), to_raw(h)), perm_bound);
}

bool og_equal(const OpenGraph& g, const OpenGraph& h) {
    if (g.dom() != h.dom() || g.cod() != h.cod() || g.vertices() != h.vertices())
        return false;
    // Cheap necessary condition: sorted vertex degrees (relabeling-invariant).
    // Only ever rejects; the positive answer comes from full comparison.
    auto degrees = [](const OpenGraph& x) {
        NatMatrix s = symmetrize(x.e());
        std::vector<Nat> deg(x.vertices(), 0);
        for (std::size_t i = 0; i < x.vertices(); ++i) {
            for (std::size_t j = 0; j < x.vertices(); ++j) deg[i] += s.at(i, j);
            for (std::size_t j = 0; j < x.dom(); ++j) deg[i] += x.c().at(j, i);
            for (std::size_t j = 0; j < x.cod(); ++j) deg[i] += x.d().at(i, j);
        }
        std::sort(deg.begin(), deg.end());
        return deg;
    };
    if (degrees(g) != degrees(h)) return false;
    return g == h;
}

} // namespace gg
