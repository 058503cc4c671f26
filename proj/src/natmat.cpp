#include "gg/natmat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gg {

Nat nat_add(Nat a, Nat b) {
    Nat r = a + b; // both <= kEntryCap < 2^32, so no uint64 wrap
    if (r > kEntryCap)
        throw OverflowError("entry overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

Nat nat_mul(Nat a, Nat b) {
    Nat r = a * b;
    if (b != 0 && (r / b != a || r > kEntryCap))
        throw OverflowError("entry overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

static void check_entry(Nat v) {
    if (v > kEntryCap)
        throw OverflowError("entry exceeds cap: " + std::to_string(v));
}

NatMatrix::NatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

NatMatrix::NatMatrix(std::size_t rows, std::size_t cols, std::vector<Nat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("entry count " + std::to_string(entries_.size()) + " does not fill " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
    for (Nat v : entries_) check_entry(v);
}

NatMatrix::NatMatrix(std::initializer_list<std::initializer_list<Nat>> rows)
    : rows_(rows.size()), cols_(0) {
    for (const auto& r : rows) {
        if (cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw DimensionError("ragged initializer");
        for (Nat v : r) {
            check_entry(v);
            entries_.push_back(v);
        }
    }
    if (rows_ > 0 && cols_ == 0) entries_.clear();
}

NatMatrix NatMatrix::identity(std::size_t n) {
    NatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void NatMatrix::set(std::size_t i, std::size_t j, Nat v) {
    check_entry(v);
    entries_[i * cols_ + j] = v;
}

NatMatrix matmul(const NatMatrix& a, const NatMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    NatMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Nat acc = 0;
            for (std::size_t l = 0; l < a.cols(); ++l)
                acc = nat_add(acc, nat_mul(a.at(i, l), b.at(l, j)));
            r.set(i, j, acc);
        }
    return r;
}

NatMatrix add(const NatMatrix& a, const NatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("add: shape mismatch");
    NatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.set(i, j, nat_add(a.at(i, j), b.at(i, j)));
    return r;
}

NatMatrix transpose(const NatMatrix& a) {
    NatMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.set(j, i, a.at(i, j));
    return r;
}

NatMatrix stack_v(const NatMatrix& top, const NatMatrix& bottom) {
    if (top.cols() != bottom.cols())
        throw DimensionError("stack_v: column mismatch");
    NatMatrix r(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j)
            r.set(i, j, top.at(i, j));
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j)
            r.set(top.rows() + i, j, bottom.at(i, j));
    return r;
}

NatMatrix stack_h(const NatMatrix& left, const NatMatrix& right) {
    if (left.rows() != right.rows())
        throw DimensionError("stack_h: row mismatch");
    NatMatrix r(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) r.set(i, j, left.at(i, j));
        for (std::size_t j = 0; j < right.cols(); ++j) r.set(i, left.cols() + j, right.at(i, j));
    }
    return r;
}

NatMatrix direct_sum(const NatMatrix& a, const NatMatrix& b) {
    NatMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            r.set(a.rows() + i, a.cols() + j, b.at(i, j));
    return r;
}

NatMatrix block2(const NatMatrix& tl, const NatMatrix& tr,
                 const NatMatrix& bl, const NatMatrix& br) {
    return stack_v(stack_h(tl, tr), stack_h(bl, br));
}

bool is_permutation(const NatMatrix& a) {
    if (a.rows() != a.cols()) return false;
    std::vector<bool> col_seen(a.cols(), false);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::size_t ones = 0, where = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Nat v = a.at(i, j);
            if (v == 1) {
                ++ones;
                where = j;
            } else if (v != 0) {
                return false;
            }
        }
        if (ones != 1 || col_seen[where]) return false;
        col_seen[where] = true;
    }
    return true;
}

std::string to_string(const NatMatrix& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) os << ",";
            os << a.at(i, j);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

PermMatrix::PermMatrix(const NatMatrix& m) {
    if (!is_permutation(m)) throw InputError("not a permutation matrix: " + to_string(m));
    mat_ = m;
    word_.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) == 1) word_[i] = j;
}

PermMatrix PermMatrix::from_word(const std::vector<std::size_t>& word) {
    NatMatrix m(word.size(), word.size());
    std::vector<bool> seen(word.size(), false);
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] >= word.size() || seen[word[i]])
            throw InputError("not a permutation word");
        seen[word[i]] = true;
        m.set(i, word[i], 1);
    }
    PermMatrix p;
    p.word_ = word;
    p.mat_ = std::move(m);
    return p;
}

PermMatrix PermMatrix::identity(std::size_t n) {
    std::vector<std::size_t> w(n);
    std::iota(w.begin(), w.end(), 0);
    return from_word(w);
}

std::vector<PermMatrix> all_permutations(std::size_t k, std::size_t bound) {
    if (k > bound)
        throw BoundError("permutation search over " + std::to_string(k) +
                         " exceeds bound " + std::to_string(bound));
    std::vector<std::size_t> w(k);
    std::iota(w.begin(), w.end(), 0);
    std::vector<PermMatrix> out;
    do {
        out.push_back(PermMatrix::from_word(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace gg
