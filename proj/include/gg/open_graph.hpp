#pragma once

#include <cstddef>
#include <vector>

#include "gg/adjclass.hpp"
#include "gg/natmat.hpp"

namespace gg {

namespace raw {

// Unreduced representative of an open graph from m left ports to n right
// ports with k internal vertices:
//   a (m x m): edges among left ports        b (m x n): left-right edges
//   c (m x k): left-vertex edges             d (k x n): vertex-right edges
//   e (k x k): edges among vertices
// a and e are adjacency representatives (orientation-irrelevant); b, c, d
// count connections exactly.
struct RawGraph {
    std::size_t m = 0, n = 0, k = 0;
    NatMatrix a, b, c, d, e;
};

void check_shape(const RawGraph& g);

RawGraph identity(std::size_t n);
RawGraph symmetry(std::size_t m, std::size_t n);
// Diagrammatic order: g from m to n, then h from n to p.
RawGraph compose(const RawGraph& g, const RawGraph& h);
RawGraph tensor(const RawGraph& g, const RawGraph& h);
// Representative with vertices relabeled: new vertex i is old vertex p.word()[i].
RawGraph permute_vertices(const RawGraph& g, const PermMatrix& p);

} // namespace raw

class OpenGraph;
struct CanonTracked;
CanonTracked canonicalize_tracked(const raw::RawGraph& g,
                                  std::size_t perm_bound = kDefaultPermBound);

// Open graph in normal form. Vertices are unordered; construction picks the
// vertex order minimizing the row-major serialization of (E canon, D, C),
// searched over all k! orders (k above perm_bound raises BoundError). A and B
// never change under relabeling, so equality of normal forms is plain field
// equality.
class OpenGraph {
  public:
    OpenGraph(std::size_t m, std::size_t n, std::size_t k,
              AdjClass a, NatMatrix b, NatMatrix c, NatMatrix d, AdjClass e,
              std::size_t perm_bound = kDefaultPermBound);

    std::size_t dom() const { return m_; }
    std::size_t cod() const { return n_; }
    std::size_t vertices() const { return k_; }
    const AdjClass& a() const { return a_; }
    const NatMatrix& b() const { return b_; }
    const NatMatrix& c() const { return c_; }
    const NatMatrix& d() const { return d_; }
    const AdjClass& e() const { return e_; }

    friend bool operator==(const OpenGraph&, const OpenGraph&) = default;

  private:
    struct Canonical {}; // tag: fields are already in normal form
    OpenGraph(Canonical, std::size_t m, std::size_t n, std::size_t k,
              AdjClass a, NatMatrix b, NatMatrix c, NatMatrix d, AdjClass e)
        : m_(m), n_(n), k_(k), a_(std::move(a)), b_(std::move(b)),
          c_(std::move(c)), d_(std::move(d)), e_(std::move(e)) {}

    friend CanonTracked canonicalize_tracked(const raw::RawGraph&, std::size_t);

    std::size_t m_, n_, k_;
    AdjClass a_;
    NatMatrix b_, c_, d_;
    AdjClass e_;
};

struct CanonTracked {
    OpenGraph graph;
    // new_of_old[v] = position of raw vertex v in the normal form
    std::vector<std::size_t> new_of_old;
};

OpenGraph canonicalize(const raw::RawGraph& g,
                       std::size_t perm_bound = kDefaultPermBound);
raw::RawGraph to_raw(const OpenGraph& g);

OpenGraph og_identity(std::size_t n);
OpenGraph og_symmetry(std::size_t m, std::size_t n);
OpenGraph og_compose(const OpenGraph& g, const OpenGraph& h,
                     std::size_t perm_bound = kDefaultPermBound);
OpenGraph og_tensor(const OpenGraph& g, const OpenGraph& h,
                    std::size_t perm_bound = kDefaultPermBound);
bool og_equal(const OpenGraph& g, const OpenGraph& h);

} // namespace gg
