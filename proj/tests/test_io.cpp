#include <gtest/gtest.h>

#include <fstream>

#include "oracle.hpp"
#include "z2r/errors.hpp"
#include "z2r/io.hpp"

using z2r::ParseError;

namespace {

std::string fixture_text(const char* name) {
    std::ifstream in(std::string(Z2R_FIXTURE_DIR) + "/" + name);
    return {std::istreambuf_iterator<char>(in), {}};
}

void expect_error_at(std::string_view text, std::size_t line, std::size_t column) {
    try {
        (void)z2r::parse_matrix(text);
        ADD_FAILURE() << "no error for: " << text;
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), line) << e.what();
        EXPECT_EQ(e.column(), column) << e.what();
    }
}

}  // namespace

TEST(Io, ParsesCommentsAndBlankLines) {
    const auto m = z2r::parse_matrix("# comment\nalpha=2 beta=1\n\n1 0 | v\n# x\n0 1 | u\n");
    EXPECT_EQ(m.shape(), (z2r::Shape{2, 1}));
    ASSERT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.row(0).ring(0), z2r::RingElem::one_plus_u());
}

TEST(Io, ErrorPositions) {
    expect_error_at("alpha=2 beta=x\n", 1, 9);
    expect_error_at("alpha=1 beta=1\n1 | x\n", 2, 5);
    expect_error_at("alpha=2 beta=1\n1 0 | 1\n1 | 1\n", 3, 3);
    expect_error_at("alpha=1 beta=1\n1 1\n", 2, 3);
    expect_error_at("alpha=0 beta=0\n", 1, 1);
    expect_error_at("alpha=99999999 beta=1\n", 1, 1);
}

TEST(Io, RoundTripRandom) {
    oracle::Rng rng(71);
    for (int i = 0; i < 200; ++i) {
        auto s = oracle::random_shape(rng, 6, 6);
        if (s.columns() == 0) s.beta = 1;
        const auto m = oracle::random_matrix(rng, s, rng() % 5);
        EXPECT_EQ(z2r::parse_matrix(z2r::serialize_matrix(m)), m);
        EXPECT_EQ(z2r::parse_compact_matrix(z2r::compact_matrix(m)), m);
    }
}

TEST(Io, FixturesAreCanonical) {
    for (const char* name : {"ex3_8.mat", "ex3_12.mat", "ex4_1.mat", "ex4_2.mat", "ex4_3.mat", "tiny.mat"}) {
        const auto text = fixture_text(name);
        EXPECT_EQ(z2r::serialize_matrix(z2r::parse_matrix(text)), text) << name;
    }
}

TEST(Io, FixtureSizes) {
    struct Expect {
        const char* name;
        std::size_t alpha, beta, rows;
    };
    for (const auto& e : {Expect{"ex3_8.mat", 2, 3, 2}, Expect{"ex3_12.mat", 3, 3, 4}, Expect{"ex4_1.mat", 9, 9, 7},
                          Expect{"ex4_2.mat", 7, 7, 8}, Expect{"ex4_3.mat", 31, 31, 5}}) {
        const auto m = z2r::read_matrix_file(std::string(Z2R_FIXTURE_DIR) + "/" + e.name);
        EXPECT_EQ(m.shape(), (z2r::Shape{e.alpha, e.beta})) << e.name;
        EXPECT_EQ(m.rows(), e.rows) << e.name;
    }
}

TEST(Io, MissingFile) { EXPECT_THROW(z2r::read_matrix_file("/nonexistent/x.mat"), z2r::Error); }

TEST(Io, BinaryConversion) {
    const auto b = oracle::random_binary(*std::make_unique<oracle::Rng>(3), 3, 5);
    EXPECT_EQ(z2r::to_binary(z2r::from_binary(b)), b);
    EXPECT_THROW(z2r::to_binary(z2r::parse_matrix("alpha=1 beta=1\n1 | 1\n")), z2r::Error);
}
