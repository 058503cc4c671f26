#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gg/natmat.hpp"

namespace gg {

// Finite commutative monoid given by its operation table. Construction checks
// unit, commutativity and associativity exhaustively, so carriers are capped
// at 100 elements (10^4 pairs); larger tables are rejected up front.
class CommMonoid {
  public:
    using Elem = std::size_t;

    CommMonoid(std::vector<std::string> labels, std::vector<Elem> op_table, Elem unit);

    static std::shared_ptr<const CommMonoid> sat_counter(Nat cap);
    static std::shared_ptr<const CommMonoid> bool_or();
    static std::shared_ptr<const CommMonoid> product(std::shared_ptr<const CommMonoid> a,
                                                     std::shared_ptr<const CommMonoid> b);

    std::size_t size() const { return labels_.size(); }
    Elem unit() const { return unit_; }
    Elem op(Elem a, Elem b) const { return table_[a * size() + b]; }
    const std::string& label(Elem e) const { return labels_[e]; }
    // Element index by label; InputError if absent.
    Elem by_label(const std::string& s) const;

    // n-fold sum n.e computed by doubling, so large n are cheap.
    Elem scalar_act(Nat n, Elem e) const;

    bool same_table(const CommMonoid& other) const;

  private:
    std::vector<std::string> labels_;
    std::vector<Elem> table_;
    Elem unit_;
};

using MonoidPtr = std::shared_ptr<const CommMonoid>;

// Element vector, i.e. a point of M^width.
struct MonoidVector {
    std::vector<CommMonoid::Elem> elems;

    std::size_t width() const { return elems.size(); }
    friend bool operator==(const MonoidVector&, const MonoidVector&) = default;
};

MonoidVector mv_unit(const CommMonoid& m, std::size_t width);
MonoidVector mv_add(const CommMonoid& m, const MonoidVector& a, const MonoidVector& b);
MonoidVector mv_concat(const MonoidVector& a, const MonoidVector& b);
MonoidVector mv_slice(const MonoidVector& a, std::size_t from, std::size_t len);

// result_i = sum_j mat_ij . v_j (matrix entries act by repeated addition).
MonoidVector mat_apply(const CommMonoid& m, const NatMatrix& mat, const MonoidVector& v);

// Enumeration of M^width: index = sum_i elems[i] * size^i.
std::uint64_t mv_space_size(const CommMonoid& m, std::size_t width, std::uint64_t guard);
MonoidVector mv_decode(const CommMonoid& m, std::size_t width, std::uint64_t index);
std::uint64_t mv_encode(const CommMonoid& m, const MonoidVector& v);

std::string mv_label(const CommMonoid& m, const MonoidVector& v);

} // namespace gg
