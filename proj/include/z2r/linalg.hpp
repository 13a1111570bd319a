#pragma once

#include <cstddef>
#include <vector>

#include "z2r/ambient.hpp"

namespace z2r {

/// Generator-matrix carrier: rows of a common shape. May have zero rows.
class MixedMatrix {
public:
    MixedMatrix() = default;
    explicit MixedMatrix(Shape shape) : shape_(shape) {}
    MixedMatrix(Shape shape, std::vector<MixedVector> rows);

    [[nodiscard]] const Shape& shape() const { return shape_; }
    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] const MixedVector& row(std::size_t i) const { return rows_[i]; }
    [[nodiscard]] const std::vector<MixedVector>& row_list() const { return rows_; }

    void push_back(MixedVector v);

    friend bool operator==(const MixedMatrix&, const MixedMatrix&) = default;

private:
    Shape shape_;
    std::vector<MixedVector> rows_;
};

/// Square matrix over R.
class RMatrix {
public:
    RMatrix() = default;
    explicit RMatrix(std::size_t n) : n_(n), a_(n * n) {}

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] RingElem operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    RingElem& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    [[nodiscard]] static RMatrix identity(std::size_t n);
    [[nodiscard]] bool is_zero() const;

    friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
    friend bool operator==(const RMatrix&, const RMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<RingElem> a_;
};

/// Rectangular matrix over F2 with fixed column count.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    explicit BinaryMatrix(std::size_t cols) : cols_(cols) {}
    BinaryMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
    BinaryMatrix(std::size_t cols, std::vector<BitVec> rows);

    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const BitVec& row(std::size_t i) const { return rows_[i]; }
    BitVec& row(std::size_t i) { return rows_[i]; }
    [[nodiscard]] bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool b) { rows_[i].set(j, b); }
    [[nodiscard]] const std::vector<BitVec>& row_list() const { return rows_; }

    void push_back(BitVec v);

    [[nodiscard]] static BinaryMatrix identity(std::size_t n);
    [[nodiscard]] BinaryMatrix transpose() const;

    friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b);
    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// (alpha, beta, k0, k1, k2); the code has 2^(k0 + 2 k1 + k2) codewords.
struct CodeType {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::size_t k0 = 0;
    std::size_t k1 = 0;
    std::size_t k2 = 0;

    [[nodiscard]] std::size_t log2_size() const { return k0 + 2 * k1 + k2; }
    [[nodiscard]] std::size_t rows() const { return k0 + k1 + k2; }

    friend bool operator==(const CodeType&, const CodeType&) = default;
};

/**
 * Column-permuted, row-reduced generator in the block template
 *
 *     ( I_k0  A1 | 0     0      uP      )
 *     ( 0     S  | I_k1  A      B1+uB2  )
 *     ( 0     0  | 0     uI_k2  uD      )
 *
 * binary_perm[p] is the original binary column placed at position p, likewise ring_perm for R columns.
 */
struct StandardForm {
    MixedMatrix matrix;
    std::vector<std::size_t> binary_perm;
    std::vector<std::size_t> ring_perm;
    CodeType type;
};

/// Pairwise inner products of the rows.
RMatrix gram(const MixedMatrix& g);

/// Ordinary matrix product G G^T with binary entries read as ring elements (no u on binary coordinates).
/// Diagnostic only; it is not the Gram matrix of the mixed inner product.
RMatrix plain_product_gram(const MixedMatrix& g);

BinaryMatrix theta(const RMatrix& m);

/// Invertible over R iff theta(m) is invertible over F2 (R is local with maximal ideal (u)).
bool r_invertible(const RMatrix& m);

std::size_t f2_rank(const BinaryMatrix& m);
bool f2_invertible(const BinaryMatrix& m);

StandardForm standard_form(const MixedMatrix& g);

/// Generator of the dual of the code generated by the matrix sf was computed from, in the original column order.
MixedMatrix dual_generator(const StandardForm& sf);

struct RowReduction {
    BinaryMatrix basis;  ///< reduced row echelon form, nonzero rows only
    std::vector<std::size_t> pivots;
    [[nodiscard]] std::size_t rank() const { return basis.rows(); }
};

RowReduction binary_row_reduce(const BinaryMatrix& b);

/// Generator of the dual under the standard dot product.
BinaryMatrix binary_dual(const BinaryMatrix& b);

/// B B^T over F2.
BinaryMatrix binary_gram(const BinaryMatrix& b);

/// Applies column permutations: result column p takes original column perm[p].
MixedVector permute_columns(const MixedVector& v, const std::vector<std::size_t>& binary_perm,
                            const std::vector<std::size_t>& ring_perm);
MixedVector unpermute_columns(const MixedVector& v, const std::vector<std::size_t>& binary_perm,
                              const std::vector<std::size_t>& ring_perm);

}  // namespace z2r
