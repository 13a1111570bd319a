#include "z2r/ambient.hpp"

#include <array>
#include <sstream>

#include "z2r/errors.hpp"

namespace z2r {

namespace {

void require_same(const Shape& a, const Shape& b, const char* op) {
    if (a != b) {
        throw ShapeMismatch(std::string(op) + ": shapes (" + std::to_string(a.alpha) + "," + std::to_string(a.beta) +
                            ") and (" + std::to_string(b.alpha) + "," + std::to_string(b.beta) + ") differ");
    }
}

}  // namespace

MixedVector::MixedVector(BitVec bin, BitVec s, BitVec t)
    : shape_{bin.size(), s.size()}, bin_(std::move(bin)), s_(std::move(s)), t_(std::move(t)) {
    if (s_.size() != t_.size()) throw ShapeMismatch("MixedVector: R bit-planes differ in length");
}

MixedVector& MixedVector::operator+=(const MixedVector& o) {
    require_same(shape_, o.shape_, "add");
    bin_ ^= o.bin_;
    s_ ^= o.s_;
    t_ ^= o.t_;
    return *this;
}

std::strong_ordering operator<=>(const MixedVector& a, const MixedVector& b) {
    if (auto c = a.shape_.alpha <=> b.shape_.alpha; c != 0) return c;
    if (auto c = a.shape_.beta <=> b.shape_.beta; c != 0) return c;
    if (auto c = a.bin_ <=> b.bin_; c != 0) return c;
    if (auto c = a.s_ <=> b.s_; c != 0) return c;
    return a.t_ <=> b.t_;
}

MixedVector scalar_mul(RingElem r, const MixedVector& v) {
    const BitVec zero_b(v.shape().alpha);
    const BitVec zero_r(v.shape().beta);
    // (rs + u rt)(s + u t) = rs*s + u (rs*t + rt*s)
    BitVec s = r.s() ? v.s_plane() : zero_r;
    BitVec t = r.s() ? v.t_plane() : zero_r;
    if (r.t()) t ^= v.s_plane();
    return {r.s() ? v.bin_plane() : zero_b, std::move(s), std::move(t)};
}

MixedVector add(const MixedVector& v, const MixedVector& w) { return v + w; }

RingElem inner_product(const MixedVector& v, const MixedVector& w) {
    require_same(v.shape(), w.shape(), "inner_product");
    const bool bin = BitVec::dot(v.bin_plane(), w.bin_plane());
    const bool ss = BitVec::dot(v.s_plane(), w.s_plane());
    const bool st = BitVec::dot(v.s_plane(), w.t_plane()) != BitVec::dot(v.t_plane(), w.s_plane());
    return {ss, st != bin};
}

std::size_t lee_weight(const MixedVector& v) {
    // units weigh 1, u weighs 2: |s| + 2|t & ~s|
    std::size_t w = v.bin_plane().popcount() + v.s_plane().popcount();
    const BitVec both = v.s_plane() & v.t_plane();
    w += 2 * (v.t_plane().popcount() - both.popcount());
    return w;
}

BinaryVector gray(const MixedVector& v) {
    const BitVec st = v.s_plane() ^ v.t_plane();
    const std::array<const BitVec*, 3> parts = {&v.bin_plane(), &v.t_plane(), &st};
    return BitVec::concat(parts);
}

MixedVector gray_inverse(const BinaryVector& b, Shape shape) {
    if (b.size() != shape.gray_length()) {
        throw ShapeMismatch("gray_inverse: length " + std::to_string(b.size()) + " != alpha + 2 beta = " +
                            std::to_string(shape.gray_length()));
    }
    BitVec bin = b.slice(0, shape.alpha);
    BitVec t = b.slice(shape.alpha, shape.beta);
    BitVec s = b.slice(shape.alpha + shape.beta, shape.beta) ^ t;
    return {std::move(bin), std::move(s), std::move(t)};
}

std::string format_vector(const MixedVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.shape().alpha; ++i) {
        out += v.bin(i) ? '1' : '0';
        out += ' ';
    }
    out += '|';
    for (std::size_t j = 0; j < v.shape().beta; ++j) {
        out += ' ';
        out += to_token(v.ring(j));
    }
    return out;
}

MixedVector parse_vector(std::string_view text, Shape shape) {
    std::istringstream in{std::string(text)};
    MixedVector v(shape);
    std::string tok;
    std::size_t i = 0;
    bool seen_bar = false;
    std::size_t j = 0;
    while (in >> tok) {
        if (tok == "|") {
            if (seen_bar) throw ParseError("second '|' in vector", 0, 0);
            seen_bar = true;
            continue;
        }
        if (tok.size() != 1) throw ParseError("unknown token '" + tok + "'", 0, 0);
        if (!seen_bar) {
            if (tok[0] != '0' && tok[0] != '1') throw ParseError("unknown binary token '" + tok + "'", 0, 0);
            if (i >= shape.alpha) throw ParseError("too many binary coordinates", 0, 0);
            v.set_bin(i++, tok[0] == '1');
        } else {
            auto r = ring_from_token(tok[0]);
            if (!r) throw ParseError("unknown ring token '" + tok + "'", 0, 0);
            if (j >= shape.beta) throw ParseError("too many ring coordinates", 0, 0);
            v.set_ring(j++, *r);
        }
    }
    if (!seen_bar) throw ParseError("missing '|' separator", 0, 0);
    if (i != shape.alpha || j != shape.beta) throw ParseError("vector does not match shape", 0, 0);
    return v;
}

}  // namespace z2r
