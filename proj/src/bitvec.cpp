#include "z2r/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace z2r {

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("BitVec::from_string: bad character");
    }
    return v;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVec: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVec: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVec::none() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

std::optional<std::size_t> BitVec::first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return std::nullopt;
}

void BitVec::clear() {
    for (auto& w : w_) w = 0;
}

bool BitVec::dot(const BitVec& a, const BitVec& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("BitVec::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i) acc ^= a.w_[i] & b.w_[i];
    return std::popcount(acc) & 1;
}

BitVec BitVec::concat(std::span<const BitVec* const> parts) {
    std::size_t n = 0;
    for (const auto* p : parts) n += p->size();
    BitVec out(n);
    std::size_t pos = 0;
    for (const auto* p : parts) {
        // word-aligned fast path is not worth it at these lengths
        for (std::size_t i = 0; i < p->size(); ++i)
            if (p->get(i)) out.set(pos + i, true);
        pos += p->size();
    }
    return out;
}

BitVec BitVec::slice(std::size_t from, std::size_t len) const {
    if (from + len > n_) throw std::out_of_range("BitVec::slice");
    BitVec out(len);
    for (std::size_t i = 0; i < len; ++i)
        if (get(from + i)) out.set(i, true);
    return out;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
        if (a.w_[i] == b.w_[i]) continue;
        // lowest differing bit decides; a set bit there sorts after
        const std::uint64_t diff = a.w_[i] ^ b.w_[i];
        const std::uint64_t low = diff & (~diff + 1);
        return (a.w_[i] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

}  // namespace z2r
