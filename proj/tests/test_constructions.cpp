#include <gtest/gtest.h>

#include "oracle.hpp"
#include "z2r/constructions.hpp"
#include "z2r/errors.hpp"
#include "z2r/io.hpp"
#include "z2r/lcd.hpp"

using z2r::BinaryMatrix;
using z2r::Code;
using z2r::MixedMatrix;

namespace {

BinaryMatrix bin(std::initializer_list<const char*> rows, std::size_t cols) {
    BinaryMatrix m(cols);
    for (const char* r : rows) m.push_back(z2r::BitVec::from_string(r));
    return m;
}

MixedMatrix mat(std::string_view text) { return z2r::parse_matrix(text); }

}  // namespace

TEST(Template, ZeroAIsAlwaysLcd) {
    const auto r = z2r::build_template({BinaryMatrix(2, 3), 1, mat("alpha=0 beta=2\n| 1 v\n| u 1\n")});
    EXPECT_TRUE(r.condition_holds);
    EXPECT_TRUE(r.is_lcd);
    EXPECT_EQ(r.code.shape(), (z2r::Shape{5, 3}));
}

// For a ones column A, I + A A^T = I + J: invertible for k = 2, singular for k = 3.
TEST(Template, OnesColumn) {
    const auto two = z2r::build_template({bin({"1", "1"}, 1), 0, mat("alpha=0 beta=1\n| 1\n| 0\n")});
    EXPECT_TRUE(two.condition_holds);
    EXPECT_TRUE(two.is_lcd);
    EXPECT_TRUE(oracle::is_lcd(two.code.generator()));

    const auto three = z2r::build_template({bin({"1", "1", "1"}, 1), 0, mat("alpha=0 beta=1\n| 1\n| 0\n| u\n")});
    EXPECT_FALSE(three.condition_holds);
    EXPECT_FALSE(three.is_lcd);
    EXPECT_FALSE(oracle::is_lcd(three.code.generator()));
}

TEST(Template, SingleRow) {
    const auto r = z2r::build_template({bin({"1"}, 1), 0, mat("alpha=0 beta=1\n| 1\n")});
    EXPECT_EQ(r.code.generator(), mat("alpha=2 beta=1\n1 1 | u\n"));
    EXPECT_FALSE(r.condition_holds);
    EXPECT_EQ(r.is_lcd, oracle::is_lcd(r.code.generator()));
}

// The Gram of the template is u (I + A A^T), never invertible over R, yet the condition decides LCD exactly.
TEST(Template, ConditionMatchesOracle) {
    oracle::Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        const std::size_t k = 1 + rng() % 3, extra = rng() % 3, beta = rng() % 3, zw = rng() % 2;
        MixedMatrix b({0, beta});
        for (std::size_t j = 0; j < k; ++j) b.push_back(oracle::random_vector(rng, {0, beta}));
        const auto r = z2r::build_template({oracle::random_binary(rng, k, extra), zw, b});
        EXPECT_FALSE(r.gram_invertible);
        EXPECT_EQ(r.is_lcd, oracle::is_lcd(r.code.generator()));
        EXPECT_EQ(r.condition_holds, r.is_lcd);
    }
}

TEST(Template, ShapeErrors) {
    EXPECT_THROW(z2r::build_template({bin({"1"}, 1), 0, mat("alpha=0 beta=1\n| 1\n| 1\n")}), z2r::ShapeMismatch);
}

TEST(Concat, OneRowExample) {
    const auto r = z2r::concat_lcd({bin({"1"}, 1), mat("alpha=2 beta=0\n1 1 |\n")});
    EXPECT_EQ(r.code.generator(), mat("alpha=3 beta=0\n1 1 1 |\n"));
    EXPECT_TRUE(r.is_lcd);
    EXPECT_TRUE(oracle::is_lcd(r.code.generator()));
    EXPECT_TRUE(r.gram_identity);
    ASSERT_TRUE(r.distance.has_value());
    EXPECT_TRUE(r.distance->holds);
}

TEST(Concat, EmptySecondFactor) {
    const auto g1 = bin({"110", "011"}, 3);
    const auto r = z2r::concat_lcd({g1, MixedMatrix({0, 2})});
    EXPECT_EQ(r.is_lcd, z2r::BinaryCode(g1).is_lcd());
    EXPECT_EQ(r.code.shape(), (z2r::Shape{3, 2}));
}

TEST(Concat, PreconditionsReported) {
    try {
        (void)z2r::concat_lcd({bin({"11"}, 2), mat("alpha=0 beta=1\n| 1\n| 1\n")});
        FAIL();
    } catch (const z2r::PreconditionError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("row count"), std::string::npos);
        EXPECT_NE(what.find("self-orthogonal"), std::string::npos);
        EXPECT_NE(what.find("binary LCD"), std::string::npos);
    }
}

// A unit row w in the second factor has u (g | w) in C and in its dual, so the construction needs k1(C2) = 0.
TEST(Concat, UnitPivotInSecondFactorBreaksLcd) {
    const auto r = z2r::concat_lcd({bin({"1"}, 1), mat("alpha=0 beta=2\n| 1 1\n")});
    EXPECT_FALSE(r.is_lcd);
    EXPECT_FALSE(oracle::is_lcd(r.code.generator()));
    EXPECT_FALSE(r.discrepancies.empty());
}

TEST(Concat, RandomValidInputs) {
    int with_unit = 0, without_unit = 0;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        const std::size_t k = 1 + trial % 3;
        const z2r::Shape s{trial % 3, 2 + trial % 3};
        const auto g1 = z2r::random_binary_lcd(k + 1 + trial % 2, k, 7, trial);
        const auto g2 = z2r::random_self_orthogonal(s, k, 7, trial);
        if (!g1 || !g2) continue;
        const auto r = z2r::concat_lcd({*g1, *g2});
        EXPECT_EQ(r.is_lcd, oracle::is_lcd(r.code.generator()));
        EXPECT_TRUE(r.gram_identity);
        if (Code(*g2).type().k1 == 0) {
            ++without_unit;
            EXPECT_TRUE(r.is_lcd);
        } else {
            ++with_unit;
            EXPECT_FALSE(r.is_lcd);
        }
    }
    EXPECT_GT(without_unit, 0);
}

TEST(Kron, IdentityFactor) {
    const Code c1(mat("alpha=0 beta=2\n| 1 u\n| 0 1\n"));
    const auto r = z2r::kronecker_lcd(c1, Code(mat("alpha=0 beta=1\n| 1\n")));
    EXPECT_EQ(r.code.generator(), c1.generator());
    EXPECT_EQ(r.is_lcd, z2r::is_lcd_ground_truth(c1));
    EXPECT_TRUE(r.gram_factorization);
}

// (1, 1) over R is self-orthogonal: [v, v] = 1 + 1 = 0.
TEST(Kron, SelfOrthogonalFactor) {
    const auto r = z2r::kronecker_lcd(Code(mat("alpha=0 beta=1\n| 1\n")), Code(mat("alpha=0 beta=2\n| 1 1\n")));
    EXPECT_EQ(r.code.generator(), mat("alpha=0 beta=2\n| 1 1\n"));
    EXPECT_FALSE(r.is_lcd);
    EXPECT_FALSE(r.inputs_lcd);
    EXPECT_FALSE(oracle::is_lcd(r.code.generator()));
    ASSERT_TRUE(r.distance.has_value());
    EXPECT_EQ(**r.distance, 2u);
}

TEST(Kron, DistanceProductExample) {
    const auto r = z2r::kronecker_lcd(Code(mat("alpha=0 beta=2\n| 1 u\n")), Code(mat("alpha=0 beta=2\n| 1 1\n")));
    EXPECT_EQ(r.code.generator(), mat("alpha=0 beta=4\n| 1 1 u u\n"));
    ASSERT_TRUE(r.distance.has_value() && r.expected_distance.has_value());
    EXPECT_EQ(static_cast<int>(**r.distance), oracle::min_lee(r.code.generator()));
    // d_L((1, u)) = 2 through u (1, u) = (u, 0)
    EXPECT_EQ(**r.expected_distance, 2u * 2u);
    EXPECT_EQ(**r.distance, 4u);
}

TEST(Kron, GramFactorizationOnPureRFactors) {
    oracle::Rng rng(62);
    for (int i = 0; i < 100; ++i) {
        const Code c1(oracle::random_matrix(rng, {0, 1 + rng() % 3}, 1 + rng() % 2));
        const Code c2(oracle::random_matrix(rng, {0, 1 + rng() % 3}, 1 + rng() % 2));
        const auto r = z2r::kronecker_lcd(c1, c2);
        EXPECT_TRUE(r.gram_factorization);
        EXPECT_FALSE(r.extension_beyond_paper);
    }
}

TEST(Kron, MixedColumnsAndFlag) {
    const auto g = z2r::kronecker(mat("alpha=1 beta=1\n1 | u\n"), mat("alpha=1 beta=1\n1 | v\n"));
    EXPECT_EQ(g, mat("alpha=1 beta=3\n1 | v u u\n"));
    EXPECT_TRUE(z2r::kronecker_lcd(Code(mat("alpha=1 beta=1\n1 | u\n")), Code(mat("alpha=1 beta=0\n1 |\n")))
                    .extension_beyond_paper);
    EXPECT_THROW(z2r::kronecker(mat("alpha=0 beta=3\n| 1 1 1\n"), mat("alpha=0 beta=3\n| 1 1 1\n"), {16, 4}),
                 z2r::PreconditionError);
}

TEST(Generators, SelfOrthogonalAndBinaryLcd) {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        const auto so = z2r::random_self_orthogonal({2, 3}, 1 + trial % 2, 3, trial);
        if (so) {
            EXPECT_TRUE(Code(*so).is_self_orthogonal());
            EXPECT_EQ(so->rows(), 1 + trial % 2);
            EXPECT_EQ(so, z2r::random_self_orthogonal({2, 3}, 1 + trial % 2, 3, trial));
        }
        const auto b = z2r::random_binary_lcd(5, 2, 3, trial);
        ASSERT_TRUE(b.has_value());
        EXPECT_TRUE(z2r::BinaryCode(*b).is_lcd());
        EXPECT_EQ(b->rows(), 2u);
    }
}
