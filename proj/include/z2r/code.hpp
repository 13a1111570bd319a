#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "z2r/linalg.hpp"

namespace z2r {

/// Bounds on exhaustive enumeration. cap_exponent = 24 means at most 2^24 elements.
struct EnumLimits {
    unsigned cap_exponent = 24;
    unsigned jobs = 1;
};

/// Minimum distance; std::nullopt marks the zero code, which has no nonzero codeword.
using MinDistance = std::optional<std::size_t>;

/**
 * Minimum Hamming weight over the nonzero vectors of span(basis). basis must be F2-independent.
 *
 * The 2^k combinations are visited in Gray-code order, split into fixed chunks that workers pull from a shared
 * counter; the result does not depend on the partition. Throws CapExceeded when k > cap_exponent, carrying the
 * minimum over the first 2^cap_exponent combinations as an upper bound.
 */
MinDistance min_weight(const BinaryMatrix& basis, const EnumLimits& limits);

/// Binary linear code held by a reduced row echelon generator.
class BinaryCode {
public:
    BinaryCode() : BinaryCode(BinaryMatrix(0)) {}
    explicit BinaryCode(const BinaryMatrix& generators);

    [[nodiscard]] const BinaryMatrix& generator() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
    [[nodiscard]] std::size_t length() const { return basis_.cols(); }
    [[nodiscard]] std::size_t dimension() const { return basis_.rows(); }

    [[nodiscard]] MinDistance min_distance(const EnumLimits& limits = {}) const;

    /// Binary LCD criterion: G G^T invertible for the reduced generator G.
    [[nodiscard]] bool is_lcd() const;
    [[nodiscard]] BinaryCode dual() const;
    [[nodiscard]] bool contains(const BitVec& v) const;
    [[nodiscard]] std::vector<BitVec> codewords(const EnumLimits& limits = {}) const;

    /// Same row space.
    friend bool operator==(const BinaryCode& a, const BinaryCode& b) { return a.basis_ == b.basis_; }

private:
    BinaryMatrix basis_;
    std::vector<std::size_t> pivots_;
    std::shared_ptr<MinDistance> distance_;  // filled on first successful enumeration
};

enum class DualStrategy {
    kGray,        ///< kernel of the Gray image, pulled back through the inverse Gray map
    kStructural,  ///< parity template read off the standard form
};

/// Z2Z2[u]-linear code: the R-submodule generated by the rows of a mixed matrix.
class Code {
public:
    explicit Code(MixedMatrix generator);

    [[nodiscard]] const MixedMatrix& generator() const { return gen_; }
    [[nodiscard]] const Shape& shape() const { return gen_.shape(); }

    [[nodiscard]] const StandardForm& standard_form() const;
    [[nodiscard]] const CodeType& type() const { return standard_form().type; }
    /// log2 |C| = k0 + 2 k1 + k2.
    [[nodiscard]] std::size_t log2_size() const { return type().log2_size(); }
    [[nodiscard]] bool is_zero() const { return log2_size() == 0; }

    /// Binary image Phi(C), generated by Phi(g) and Phi(u g) over the rows g.
    [[nodiscard]] const BinaryCode& gray_image() const;

    /// Exact codeword set, sorted. Throws CapExceeded above 2^cap_exponent codewords.
    [[nodiscard]] std::vector<MixedVector> codewords(const EnumLimits& limits = {}) const;

    [[nodiscard]] Code dual(DualStrategy strategy = DualStrategy::kGray) const;

    /// Minimum Lee distance, equal to the minimum Hamming weight of Phi(C).
    [[nodiscard]] MinDistance min_lee_distance(const EnumLimits& limits = {}) const;

    [[nodiscard]] BinaryCode projection_alpha() const;
    [[nodiscard]] Code projection_beta() const;
    /// C = C_alpha x C_beta, decided by |C| = |C_alpha| |C_beta|.
    [[nodiscard]] bool is_separable() const;
    [[nodiscard]] bool is_self_orthogonal() const;

    [[nodiscard]] bool contains(const MixedVector& v) const;
    /// Equal codeword sets.
    [[nodiscard]] bool same_codewords(const Code& other) const;

private:
    struct Cache;

    MixedMatrix gen_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace z2r
