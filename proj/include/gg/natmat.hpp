#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gg/errors.hpp"

namespace gg {

using Nat = std::uint64_t;

// Largest representable entry; arithmetic beyond this throws OverflowError.
inline constexpr Nat kEntryCap = 4294967295ULL; // 2^32 - 1

// Default cutoff for exhaustive vertex-permutation searches.
inline constexpr std::size_t kDefaultPermBound = 8;

Nat nat_add(Nat a, Nat b);
Nat nat_mul(Nat a, Nat b);

// Dense row-major matrix over the naturals. Either dimension may be zero;
// a 0 x n or n x 0 matrix is a real object, not an error.
class NatMatrix {
  public:
    NatMatrix() : rows_(0), cols_(0) {}
    NatMatrix(std::size_t rows, std::size_t cols);
    NatMatrix(std::size_t rows, std::size_t cols, std::vector<Nat> entries);
    NatMatrix(std::initializer_list<std::initializer_list<Nat>> rows);

    static NatMatrix identity(std::size_t n);
    static NatMatrix zero(std::size_t rows, std::size_t cols) { return NatMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Nat at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Nat v);

    friend bool operator==(const NatMatrix&, const NatMatrix&) = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Nat> entries_; // size rows_ * cols_
};

NatMatrix matmul(const NatMatrix& a, const NatMatrix& b);
NatMatrix add(const NatMatrix& a, const NatMatrix& b);
NatMatrix transpose(const NatMatrix& a);
NatMatrix stack_v(const NatMatrix& top, const NatMatrix& bottom); // same cols
NatMatrix stack_h(const NatMatrix& left, const NatMatrix& right); // same rows
NatMatrix direct_sum(const NatMatrix& a, const NatMatrix& b);
// [[tl tr] [bl br]]; row/col counts must agree along shared edges.
NatMatrix block2(const NatMatrix& tl, const NatMatrix& tr,
                 const NatMatrix& bl, const NatMatrix& br);

bool is_permutation(const NatMatrix& a);

std::string to_string(const NatMatrix& a);

// Permutation matrix with its one-line word cached: matrix row i has its 1 in
// column word[i].
class PermMatrix {
  public:
    explicit PermMatrix(const NatMatrix& m);
    static PermMatrix from_word(const std::vector<std::size_t>& word);
    static PermMatrix identity(std::size_t n);

    std::size_t dim() const { return word_.size(); }
    const std::vector<std::size_t>& word() const { return word_; }
    const NatMatrix& matrix() const { return mat_; }

    friend bool operator==(const PermMatrix&, const PermMatrix&) = default;

  private:
    PermMatrix() = default;
    std::vector<std::size_t> word_;
    NatMatrix mat_;
};

// All of S_k in lexicographic word order. k above the bound throws BoundError.
std::vector<PermMatrix> all_permutations(std::size_t k,
                                         std::size_t bound = kDefaultPermBound);

} // namespace gg
