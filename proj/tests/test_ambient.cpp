#include <gtest/gtest.h>

#include "oracle.hpp"
#include "z2r/ambient.hpp"
#include "z2r/errors.hpp"

using z2r::MixedVector;
using z2r::RingElem;
using z2r::Shape;

namespace {

MixedVector vec(std::string_view text, Shape s) { return z2r::parse_vector(text, s); }

}  // namespace

TEST(Ambient, ScalarMultiplication) {
    EXPECT_EQ(z2r::scalar_mul(RingElem::u(), vec("1 | v", {1, 1})), vec("0 | u", {1, 1}));
    oracle::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto v = oracle::random_vector(rng, oracle::random_shape(rng, 5, 5));
        EXPECT_EQ(z2r::scalar_mul(RingElem::one(), v), v);
        // u annihilates binary parts and u-multiples
        EXPECT_TRUE(z2r::scalar_mul(RingElem::u(), z2r::scalar_mul(RingElem::u(), v)).is_zero());
        for (auto r : z2r::kRingElems)
            EXPECT_EQ(oracle::from(z2r::scalar_mul(r, v)), oracle::times(oracle::enc(r), oracle::from(v)));
    }
}

TEST(Ambient, Addition) {
    EXPECT_TRUE(z2r::add(vec("1 | u", {1, 1}), vec("1 | u", {1, 1})).is_zero());
    EXPECT_EQ(z2r::add(vec("1 | 1", {1, 1}), vec("0 | u", {1, 1})), vec("1 | v", {1, 1}));
    const auto v = vec("1 0 | u v 1", {2, 3});
    EXPECT_EQ(z2r::add(v, MixedVector({2, 3})), v);
    EXPECT_THROW(z2r::add(vec("1 | 1", {1, 1}), vec("1 1 |", {2, 0})), z2r::ShapeMismatch);
}

TEST(Ambient, InnerProduct) {
    EXPECT_EQ(z2r::inner_product(vec("1 | 1", {1, 1}), vec("1 | 1", {1, 1})), RingElem::one_plus_u());
    EXPECT_EQ(z2r::inner_product(vec("1 1 0 | 0", {3, 1}), vec("1 0 0 | 0", {3, 1})), RingElem::u());
    EXPECT_EQ(z2r::inner_product(vec("1 1 | u v", {2, 2}), MixedVector({2, 2})), RingElem::zero());
    EXPECT_THROW(z2r::inner_product(MixedVector({1, 1}), MixedVector({1, 2})), z2r::ShapeMismatch);
}

TEST(Ambient, InnerProductMatchesOracle) {
    oracle::Rng rng(12);
    for (int i = 0; i < 2000; ++i) {
        const auto s = oracle::random_shape(rng, 6, 6);
        const auto v = oracle::random_vector(rng, s), w = oracle::random_vector(rng, s);
        const auto r = z2r::inner_product(v, w);
        EXPECT_EQ(oracle::enc(r), oracle::ip(oracle::from(v), oracle::from(w)));
        EXPECT_EQ(r, z2r::inner_product(w, v));
    }
}

TEST(Ambient, LeeWeight) {
    EXPECT_EQ(z2r::lee_weight(vec("1 | u v", {1, 2})), 4u);
    EXPECT_EQ(z2r::lee_weight(MixedVector({3, 3})), 0u);
    EXPECT_EQ(z2r::lee_weight(vec("0 | u u u", {1, 3})), 6u);
}

TEST(Ambient, GrayExamples) {
    EXPECT_EQ(z2r::gray(vec("1 | u", {1, 1})).to_string(), "111");
    EXPECT_EQ(z2r::gray(vec("0 | v", {1, 1})).to_string(), "010");
    EXPECT_TRUE(z2r::gray(MixedVector({2, 2})).none());
    EXPECT_EQ(z2r::gray_inverse(z2r::BitVec::from_string("111"), {1, 1}), vec("1 | u", {1, 1}));
    EXPECT_TRUE(z2r::gray_inverse(z2r::BitVec(5), {1, 2}).is_zero());
    EXPECT_THROW(z2r::gray_inverse(z2r::BitVec(4), {1, 2}), z2r::ShapeMismatch);
}

// Every vector of every shape with alpha + 2 beta <= 12.
TEST(Ambient, GrayExhaustiveSmallShapes) {
    for (std::size_t beta = 0; beta <= 6; ++beta)
        for (std::size_t alpha = 0; alpha + 2 * beta <= 12; ++alpha) {
            const Shape s{alpha, beta};
            const std::size_t n = s.gray_length();
            std::vector<MixedVector> all;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                z2r::BitVec b(n);
                for (std::size_t i = 0; i < n; ++i) b.set(i, (m >> i) & 1);
                const auto v = z2r::gray_inverse(b, s);
                ASSERT_EQ(z2r::gray(v), b);
                ASSERT_EQ(b.popcount(), z2r::lee_weight(v));
                ASSERT_EQ(std::vector<int>(oracle::gray(oracle::from(v))).size(), n);
                if (m < 64) all.push_back(v);
            }
            for (const auto& v : all)
                for (const auto& w : all) ASSERT_EQ(z2r::gray(v + w), z2r::gray(v) ^ z2r::gray(w));
        }
}

TEST(Ambient, GrayRandomLargeShapes) {
    oracle::Rng rng(13);
    for (int i = 0; i < 10000; ++i) {
        const Shape s{7 + rng() % 40, 3 + rng() % 40};
        const auto v = oracle::random_vector(rng, s), w = oracle::random_vector(rng, s);
        const auto gv = z2r::gray(v);
        ASSERT_EQ(z2r::gray_inverse(gv, s), v);
        ASSERT_EQ(gv.popcount(), z2r::lee_weight(v));
        ASSERT_EQ(z2r::gray(v + w), gv ^ z2r::gray(w));
        const auto og = oracle::gray(oracle::from(v));
        for (std::size_t j = 0; j < og.size(); ++j) ASSERT_EQ(gv.get(j), og[j] != 0);
    }
}

TEST(Ambient, FormatParseRoundTrip) {
    const auto v = vec("1 0 | u v 1 0", {2, 4});
    EXPECT_EQ(z2r::format_vector(v), "1 0 | u v 1 0");
    EXPECT_EQ(vec(z2r::format_vector(v), {2, 4}), v);
    EXPECT_THROW(vec("1 0 u v", {2, 2}), z2r::ParseError);
    EXPECT_THROW(vec("1 | x", {1, 1}), z2r::ParseError);
}
