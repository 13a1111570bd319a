#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace z2r {

/// Element s + u*t of the local ring R = Z2 + uZ2, u^2 = 0.
///
/// Stored as two bits so that vectors over R split into two bit-planes.
class RingElem {
public:
    constexpr RingElem() = default;
    constexpr RingElem(bool s, bool t) : s_(s), t_(t) {}

    static constexpr RingElem zero() { return {false, false}; }
    static constexpr RingElem one() { return {true, false}; }
    static constexpr RingElem u() { return {false, true}; }
    static constexpr RingElem one_plus_u() { return {true, true}; }

    [[nodiscard]] constexpr bool s() const { return s_; }
    [[nodiscard]] constexpr bool t() const { return t_; }

    friend constexpr RingElem operator+(RingElem a, RingElem b) { return {a.s_ != b.s_, a.t_ != b.t_}; }

    friend constexpr RingElem operator*(RingElem a, RingElem b) {
        return {a.s_ && b.s_, (a.s_ && b.t_) != (a.t_ && b.s_)};
    }

    RingElem& operator+=(RingElem o) { return *this = *this + o; }
    RingElem& operator*=(RingElem o) { return *this = *this * o; }

    friend constexpr bool operator==(RingElem, RingElem) = default;

private:
    bool s_ = false;
    bool t_ = false;
};

inline constexpr std::array<RingElem, 4> kRingElems = {RingElem::zero(), RingElem::one(), RingElem::u(),
                                                       RingElem::one_plus_u()};

/// Reduction R -> Z2, s + ut -> s.
constexpr bool theta(RingElem a) { return a.s(); }

constexpr bool is_unit(RingElem a) { return a.s(); }

/// 0 -> 0, 1 and 1+u -> 1, u -> 2.
constexpr unsigned lee_weight(RingElem a) { return a.s() ? 1u : (a.t() ? 2u : 0u); }

/// Text token: one of 0, 1, u, v (v = 1+u).
constexpr char to_token(RingElem a) {
    if (a.s()) return a.t() ? 'v' : '1';
    return a.t() ? 'u' : '0';
}

constexpr std::optional<RingElem> ring_from_token(char c) {
    switch (c) {
        case '0': return RingElem::zero();
        case '1': return RingElem::one();
        case 'u': return RingElem::u();
        case 'v': return RingElem::one_plus_u();
        default: return std::nullopt;
    }
}

}  // namespace z2r
