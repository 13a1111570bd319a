#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace z2r {

/// Fixed-length packed bit vector over F2. Bits past size() are kept zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    /// Parses a string of '0'/'1' characters.
    static BitVec from_string(std::string_view bits);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] bool empty() const { return n_ == 0; }

    [[nodiscard]] bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (b)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o);
    BitVec& operator&=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

    [[nodiscard]] std::size_t popcount() const;
    [[nodiscard]] bool none() const;
    [[nodiscard]] bool any() const { return !none(); }
    [[nodiscard]] std::optional<std::size_t> first_set() const;

    void clear();

    /// Standard dot product over F2.
    [[nodiscard]] static bool dot(const BitVec& a, const BitVec& b);

    [[nodiscard]] static BitVec concat(std::span<const BitVec* const> parts);
    [[nodiscard]] BitVec slice(std::size_t from, std::size_t len) const;

    [[nodiscard]] std::span<const std::uint64_t> words() const { return w_; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;
    /// Lexicographic by bit index 0, 1, ... (bit 0 most significant for ordering).
    friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b);

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace z2r
