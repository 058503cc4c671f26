#include "gg/monoid.hpp"

#include <algorithm>

#include "gg/errors.hpp"

namespace gg {

namespace {
constexpr std::size_t kMaxCarrier = 100; // 10^4 ordered pairs to law-check
}

CommMonoid::CommMonoid(std::vector<std::string> labels, std::vector<Elem> op_table, Elem unit)
    : labels_(std::move(labels)), table_(std::move(op_table)), unit_(unit) {
    std::size_t n = labels_.size();
    if (n == 0) throw InputError("monoid carrier is empty");
    if (n > kMaxCarrier)
        throw BoundError("monoid carrier of " + std::to_string(n) +
                         " exceeds the law-check limit of " + std::to_string(kMaxCarrier));
    if (table_.size() != n * n) throw InputError("operation table has the wrong size");
    if (unit_ >= n) throw InputError("unit element out of range");
    for (Elem v : table_)
        if (v >= n) throw InputError("operation table entry out of range");

    for (Elem a = 0; a < n; ++a) {
        if (op(unit_, a) != a || op(a, unit_) != a)
            throw InputError("unit law fails at " + labels_[a]);
        for (Elem b = 0; b < n; ++b) {
            if (op(a, b) != op(b, a))
                throw InputError("commutativity fails at (" + labels_[a] + ", " + labels_[b] + ")");
            for (Elem c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw InputError("associativity fails at (" + labels_[a] + ", " +
                                     labels_[b] + ", " + labels_[c] + ")");
        }
    }
}

MonoidPtr CommMonoid::sat_counter(Nat cap) {
    if (cap > kMaxCarrier - 1)
        throw BoundError("saturating counter cap " + std::to_string(cap) + " is too large");
    std::size_t n = static_cast<std::size_t>(cap) + 1;
    std::vector<std::string> labels(n);
    std::vector<Elem> table(n * n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = std::min(i + j, n - 1);
    return std::make_shared<CommMonoid>(std::move(labels), std::move(table), 0);
}

MonoidPtr CommMonoid::bool_or() {
    return std::make_shared<CommMonoid>(std::vector<std::string>{"0", "1"},
                                        std::vector<Elem>{0, 1, 1, 1}, 0);
}

MonoidPtr CommMonoid::product(MonoidPtr a, MonoidPtr b) {
    std::size_t na = a->size(), nb = b->size();
    if (na * nb > kMaxCarrier)
        throw BoundError("product carrier of " + std::to_string(na * nb) + " is too large");
    std::vector<std::string> labels(na * nb);
    std::vector<Elem> table(na * nb * na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            labels[i * nb + j] = "(" + a->label(i) + "," + b->label(j) + ")";
    for (std::size_t x = 0; x < na * nb; ++x)
        for (std::size_t y = 0; y < na * nb; ++y) {
            Elem fi = a->op(x / nb, y / nb);
            Elem se = b->op(x % nb, y % nb);
            table[x * na * nb + y] = fi * nb + se;
        }
    return std::make_shared<CommMonoid>(std::move(labels), std::move(table), 0);
}

CommMonoid::Elem CommMonoid::by_label(const std::string& s) const {
    for (Elem e = 0; e < size(); ++e)
        if (labels_[e] == s) return e;
    throw InputError("no monoid element labeled '" + s + "'");
}

CommMonoid::Elem CommMonoid::scalar_act(Nat n, Elem e) const {
    Elem acc = unit_;
    Elem base = e;
    while (n > 0) {
        if (n & 1) acc = op(acc, base);
        base = op(base, base);
        n >>= 1;
    }
    return acc;
}

bool CommMonoid::same_table(const CommMonoid& other) const {
    return labels_ == other.labels_ && table_ == other.table_ && unit_ == other.unit_;
}

MonoidVector mv_unit(const CommMonoid& m, std::size_t width) {
    return MonoidVector{std::vector<CommMonoid::Elem>(width, m.unit())};
}

MonoidVector mv_add(const CommMonoid& m, const MonoidVector& a, const MonoidVector& b) {
    if (a.width() != b.width()) throw DimensionError("mv_add: width mismatch");
    MonoidVector r = a;
    for (std::size_t i = 0; i < r.width(); ++i) r.elems[i] = m.op(r.elems[i], b.elems[i]);
    return r;
}

MonoidVector mv_concat(const MonoidVector& a, const MonoidVector& b) {
    MonoidVector r = a;
    r.elems.insert(r.elems.end(), b.elems.begin(), b.elems.end());
    return r;
}

MonoidVector mv_slice(const MonoidVector& a, std::size_t from, std::size_t len) {
    return MonoidVector{std::vector<CommMonoid::Elem>(a.elems.begin() + static_cast<std::ptrdiff_t>(from),
                                                      a.elems.begin() + static_cast<std::ptrdiff_t>(from + len))};
}

MonoidVector mat_apply(const CommMonoid& m, const NatMatrix& mat, const MonoidVector& v) {
    if (mat.cols() != v.width())
        throw DimensionError("mat_apply: " + std::to_string(mat.cols()) + " columns vs width " +
                             std::to_string(v.width()));
    MonoidVector r = mv_unit(m, mat.rows());
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j)
            r.elems[i] = m.op(r.elems[i], m.scalar_act(mat.at(i, j), v.elems[j]));
    return r;
}

std::uint64_t mv_space_size(const CommMonoid& m, std::size_t width, std::uint64_t guard) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < width; ++i) {
        if (total > guard / m.size() + 1) total = guard + 1;
        else total *= m.size();
        if (total > guard)
            throw BoundError("state space " + std::to_string(m.size()) + "^" +
                             std::to_string(width) + " exceeds guard " + std::to_string(guard));
    }
    return total;
}

MonoidVector mv_decode(const CommMonoid& m, std::size_t width, std::uint64_t index) {
    MonoidVector r = mv_unit(m, width);
    for (std::size_t i = 0; i < width; ++i) {
        r.elems[i] = static_cast<CommMonoid::Elem>(index % m.size());
        index /= m.size();
    }
    return r;
}

std::uint64_t mv_encode(const CommMonoid& m, const MonoidVector& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = v.width(); i-- > 0;) idx = idx * m.size() + v.elems[i];
    return idx;
}

std::string mv_label(const CommMonoid& m, const MonoidVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.width(); ++i) {
        if (i) s += ",";
        s += m.label(v.elems[i]);
    }
    return s + "]";
}

} // namespace gg
