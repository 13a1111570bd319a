#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "z2r/bitvec.hpp"
#include "z2r/ring.hpp"

namespace z2r {

/// Ambient space Z2^alpha x R^beta.
struct Shape {
    std::size_t alpha = 0;
    std::size_t beta = 0;

    /// Length of the binary (Gray) image, alpha + 2 beta.
    [[nodiscard]] std::size_t gray_length() const { return alpha + 2 * beta; }
    [[nodiscard]] std::size_t columns() const { return alpha + beta; }

    friend bool operator==(const Shape&, const Shape&) = default;
};

using BinaryVector = BitVec;

/// Element of Z2^alpha x R^beta. The R part is stored as the two bit-planes s and t of s + ut.
class MixedVector {
public:
    MixedVector() = default;
    explicit MixedVector(Shape shape) : shape_(shape), bin_(shape.alpha), s_(shape.beta), t_(shape.beta) {}
    MixedVector(BitVec bin, BitVec s, BitVec t);

    [[nodiscard]] const Shape& shape() const { return shape_; }

    [[nodiscard]] bool bin(std::size_t i) const { return bin_.get(i); }
    void set_bin(std::size_t i, bool b) { bin_.set(i, b); }
    [[nodiscard]] RingElem ring(std::size_t j) const { return {s_.get(j), t_.get(j)}; }
    void set_ring(std::size_t j, RingElem r) {
        s_.set(j, r.s());
        t_.set(j, r.t());
    }

    [[nodiscard]] const BitVec& bin_plane() const { return bin_; }
    [[nodiscard]] const BitVec& s_plane() const { return s_; }
    [[nodiscard]] const BitVec& t_plane() const { return t_; }

    [[nodiscard]] bool is_zero() const { return bin_.none() && s_.none() && t_.none(); }

    MixedVector& operator+=(const MixedVector& o);
    friend MixedVector operator+(MixedVector a, const MixedVector& b) { return a += b; }

    friend bool operator==(const MixedVector&, const MixedVector&) = default;
    friend std::strong_ordering operator<=>(const MixedVector& a, const MixedVector& b);

private:
    Shape shape_;
    BitVec bin_;
    BitVec s_;
    BitVec t_;
};

/// r * (a | x) = (theta(r) a | r x).
MixedVector scalar_mul(RingElem r, const MixedVector& v);

MixedVector add(const MixedVector& v, const MixedVector& w);

/// [v, w] = u * sum a_i b_i + sum x_j y_j. Throws ShapeMismatch on differing shapes.
RingElem inner_product(const MixedVector& v, const MixedVector& w);

std::size_t lee_weight(const MixedVector& v);

/// (a | s + ut) -> (a, t, s + t), length alpha + 2 beta.
BinaryVector gray(const MixedVector& v);

/// Inverse of gray(). Throws ShapeMismatch when b has the wrong length.
MixedVector gray_inverse(const BinaryVector& b, Shape shape);

/// Text form `1 0 | u v 0`.
std::string format_vector(const MixedVector& v);
MixedVector parse_vector(std::string_view text, Shape shape);

}  // namespace z2r
