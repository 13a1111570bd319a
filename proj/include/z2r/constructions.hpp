#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z2r/code.hpp"

namespace z2r {

// ---------------------------------------------------------------------------------------------------------------
// (I_k, A | 0, uB)
// ---------------------------------------------------------------------------------------------------------------

struct TemplateInput {
    BinaryMatrix a;           ///< k x (alpha - k)
    std::size_t zero_width;   ///< width of the zero block in the R part
    MixedMatrix b;            ///< shape (0, beta - zero_width), k rows; the R part is u*b
};

struct TemplateResult {
    Code code;
    /// I_k + A A^T invertible over F2, i.e. 1 is not an eigenvalue of A A^T.
    bool condition_holds = false;
    bool gram_invertible = false;
    bool is_lcd = false;
};

TemplateResult build_template(const TemplateInput& in);

// ---------------------------------------------------------------------------------------------------------------
// (G1 | G2) with G1 binary LCD and G2 self-orthogonal
// ---------------------------------------------------------------------------------------------------------------

struct ConcatInput {
    BinaryMatrix g1;
    MixedMatrix g2;
};

struct DistanceBound {
    MinDistance code;    ///< d_L(C)
    MinDistance first;   ///< d_H(C1)
    MinDistance second;  ///< d_L(C2)
    bool holds = false;
};

struct ConcatResult {
    Code code;
    bool binary_gram_invertible = false;  ///< G1 G1^T over F2
    bool gram_invertible = false;         ///< Gram of (G1 | G2) over R
    /// Gram of (G1 | G2) equals u * (G1 G1^T) entrywise.
    bool gram_identity = false;
    bool is_lcd = false;
    std::optional<DistanceBound> distance{};  ///< d_L(C) >= d_H(C1) + d_L(C2); empty when enumeration is too large
    std::vector<std::string> discrepancies{};
};

/// Throws PreconditionError listing every violated input invariant (row counts, self-orthogonality, binary LCD).
ConcatResult concat_lcd(const ConcatInput& in, const EnumLimits& limits = {});

// ---------------------------------------------------------------------------------------------------------------
// Kronecker product
// ---------------------------------------------------------------------------------------------------------------

struct KronLimits {
    std::size_t max_rows = 4096;
    std::size_t max_columns = 4096;
};

/**
 * G1 ⊗ G2 for mixed matrices. A product column is binary iff both factor columns are binary, otherwise it is an R
 * column; entries multiply in R (binary entries read as 0/1) and binary columns keep theta of the product. Binary
 * product columns come first, each group in Kronecker order (i * n2 + j).
 */
MixedMatrix kronecker(const MixedMatrix& g1, const MixedMatrix& g2, const KronLimits& limits = {});

RMatrix kronecker(const RMatrix& a, const RMatrix& b);

struct KronResult {
    Code code;
    bool inputs_lcd = false;
    /// Either factor mixes binary and R columns.
    bool extension_beyond_paper = false;
    /// gram(G1 ⊗ G2) == gram(G1) ⊗ gram(G2).
    bool gram_factorization = false;
    bool is_lcd = false;
    /// d_L(C) vs d_L(C1) d_L(C2); empty when enumeration is too large.
    std::optional<MinDistance> distance{};
    std::optional<MinDistance> expected_distance{};
    std::vector<std::string> discrepancies{};
};

KronResult kronecker_lcd(const Code& c1, const Code& c2, const EnumLimits& enum_limits = {},
                         const KronLimits& limits = {});



/**
 * Standard-form generator of a random self-orthogonal code with exactly k rows (k = k0 + k1 + k2), built by drawing
 * rows orthogonal to themselves and to every earlier row and keeping those that enlarge the code. Deterministic in
 * (seed, trial). Returns nullopt when no such code is found within the attempt budget.
 */
std::optional<MixedMatrix> random_self_orthogonal(Shape shape, std::size_t k, std::uint64_t seed, std::uint64_t trial);

/// Random k x n binary matrix with G G^T invertible, deterministic in (seed, trial); nullopt if none found.
std::optional<BinaryMatrix> random_binary_lcd(std::size_t n, std::size_t k, std::uint64_t seed, std::uint64_t trial);

}  // namespace z2r
