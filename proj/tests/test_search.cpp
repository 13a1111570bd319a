#include <gtest/gtest.h>

#include "oracle.hpp"
#include "z2r/errors.hpp"
#include "z2r/io.hpp"
#include "z2r/lcd.hpp"
#include "z2r/search.hpp"

using z2r::SearchConfig;

TEST(Search, RandomGeneratorIsPureFunction) {
    const auto a = z2r::random_generator({4, 4}, 3, 99, 17);
    EXPECT_EQ(a, z2r::random_generator({4, 4}, 3, 99, 17));
    EXPECT_NE(a, z2r::random_generator({4, 4}, 3, 99, 18));
    EXPECT_NE(a, z2r::random_generator({4, 4}, 3, 100, 17));
    EXPECT_EQ(z2r::random_generator({2, 1}, 9, 1, 0).rows(), 9u);
}

// Chi-square on pooled entry counts; critical values at p = 0.001.
TEST(Search, RandomGeneratorIsUniform) {
    std::array<double, 2> bin{};
    std::array<double, 4> ring{};
    for (std::uint64_t t = 0; t < 10000; ++t) {
        const auto g = z2r::random_generator({4, 4}, 2, 5, t);
        for (const auto& r : g.row_list()) {
            for (std::size_t i = 0; i < 4; ++i) bin[r.bin(i)] += 1;
            for (std::size_t j = 0; j < 4; ++j) ring[oracle::enc(r.ring(j))] += 1;
        }
    }
    auto chi2 = [](auto counts) {
        double total = 0, x = 0;
        for (double c : counts) total += c;
        const double e = total / counts.size();
        for (double c : counts) x += (c - e) * (c - e) / e;
        return x;
    };
    EXPECT_LT(chi2(bin), 10.83);
    EXPECT_LT(chi2(ring), 16.27);
}

TEST(Search, UnknownFilterRejected) {
    EXPECT_THROW(z2r::validate_filters({"gram", "fast"}), z2r::PreconditionError);
    EXPECT_NO_THROW(z2r::validate_filters({"gram", "lcd", "row-unit", "gram-strict"}));
}

TEST(Search, AllFilteredGivesEmptyRecord) {
    SearchConfig cfg;
    cfg.shape = {3, 0};
    cfg.k = 2;
    cfg.trials = 50;
    cfg.filter_order = {"row-unit"};
    const auto r = z2r::run_search(cfg);
    EXPECT_TRUE(r.record.empty());
    EXPECT_EQ(r.counters.trials, 50u);
    EXPECT_EQ(r.counters.filtered + r.counters.zero_code, 50u);
    EXPECT_TRUE(r.log.empty());
}

TEST(Search, RecordedEntriesAreLcd) {
    SearchConfig cfg;
    cfg.shape = {3, 3};
    cfg.k = 2;
    cfg.trials = 300;
    cfg.seed = 4;
    const auto r = z2r::run_search(cfg);
    EXPECT_EQ(r.counters.trials,
              r.counters.zero_code + r.counters.filtered + r.counters.not_lcd + r.counters.cap_exceeded +
                  r.counters.recorded);
    EXPECT_FALSE(r.record.empty());
    for (const auto& [key, e] : r.record.entries()) {
        EXPECT_TRUE(oracle::is_lcd(e.generator));
        EXPECT_EQ(static_cast<int>(e.d), oracle::min_lee(e.generator));
        EXPECT_EQ(e.generator, z2r::random_generator(cfg.shape, cfg.k, cfg.seed, e.trial));
    }
}

TEST(Search, InjectedWorkedExample) {
    SearchConfig cfg;
    cfg.shape = {9, 9};
    cfg.k = 7;
    cfg.trials = 2000;
    cfg.seed = 1;
    cfg.jobs = 4;
    cfg.inject = z2r::read_matrix_file(std::string(Z2R_FIXTURE_DIR) + "/ex4_1.mat");
    const auto r = z2r::run_search(cfg);
    const auto it = r.record.entries().find({27, 8});
    ASSERT_NE(it, r.record.entries().end());
    EXPECT_GE(it->second.d, 10u);
    EXPECT_NE(r.log.find("\"trial\":0}"), std::string::npos);
    bool any27 = false;
    for (const auto& [key, e] : r.record.entries()) any27 |= key.first == 27;
    EXPECT_TRUE(any27);
}

TEST(Search, WorkerCountDoesNotChangeOutput) {
    SearchConfig cfg;
    cfg.shape = {4, 3};
    cfg.k = 3;
    cfg.trials = 5000;
    cfg.seed = 77;
    cfg.jobs = 1;
    const auto one = z2r::run_search(cfg);
    cfg.jobs = 8;
    const auto eight = z2r::run_search(cfg);
    EXPECT_EQ(one.record.to_table(), eight.record.to_table());
    EXPECT_EQ(one.log, eight.log);
}

TEST(Search, ReplayRebuildsTable) {
    SearchConfig cfg;
    cfg.shape = {3, 3};
    cfg.k = 3;
    cfg.trials = 500;
    cfg.seed = 9;
    const auto r = z2r::run_search(cfg);
    EXPECT_EQ(z2r::SearchRecord::replay(r.log).to_table(), r.record.to_table());
    EXPECT_EQ(z2r::SearchRecord::from_table(r.record.to_table()).to_table(), r.record.to_table());

    // Offer order among candidates does not matter.
    std::vector<std::string> lines;
    std::istringstream in(r.log);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    std::reverse(lines.begin(), lines.end());
    std::string reversed;
    for (const auto& l : lines) reversed += l + "\n";
    EXPECT_EQ(z2r::SearchRecord::replay(reversed).to_table(), r.record.to_table());
}

TEST(Search, TieBreakPrefersSmallerMatrix) {
    z2r::SearchRecord rec;
    z2r::SearchEntry a;
    a.n = 3;
    a.k = 1;
    a.d = 3;
    a.generator = z2r::parse_matrix("alpha=1 beta=1\n1 | 1\n");
    auto b = a;
    b.generator = z2r::parse_matrix("alpha=1 beta=1\n1 | v\n");
    EXPECT_TRUE(rec.offer(b));
    EXPECT_TRUE(rec.offer(a));
    EXPECT_FALSE(rec.offer(b));
    auto c = b;
    c.d = 4;
    EXPECT_TRUE(rec.offer(c));
    EXPECT_EQ(rec.entries().begin()->second.d, 4u);
}

TEST(Search, JsonLineRoundTrip) {
    z2r::SearchEntry e;
    e.n = 7;
    e.k = 2;
    e.d = 3;
    e.generator = z2r::parse_matrix("alpha=1 beta=3\n1 | u v 0\n0 | 1 1 u\n");
    e.gram_invertible = true;
    e.seed = 12;
    e.trial = 34;
    const auto back = z2r::entry_from_json_line(z2r::to_json_line(e));
    EXPECT_EQ(z2r::to_json_line(back), z2r::to_json_line(e));
    EXPECT_THROW(z2r::entry_from_json_line("{\"n\": 1}"), z2r::ParseError);
}
