#include "z2r/search.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "z2r/errors.hpp"
#include "z2r/io.hpp"
#include "z2r/lcd.hpp"

namespace z2r {

namespace {

constexpr std::uint64_t kBatch = 4096;

class BitSource {
public:
    BitSource(std::uint64_t seed, std::uint64_t trial)
        : eng_([&] {
              std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
              return std::mt19937_64(seq);
          }()) {}

    bool bit() {
        if (left_ == 0) {
            buf_ = eng_();
            left_ = 64;
        }
        const bool b = buf_ & 1u;
        buf_ >>= 1;
        --left_;
        return b;
    }

private:
    std::mt19937_64 eng_;
    std::uint64_t buf_ = 0;
    unsigned left_ = 0;
};

enum class Verdict { kZero, kFiltered, kNotLcd, kCap, kRecorded };

struct Outcome {
    Verdict verdict = Verdict::kFiltered;
    bool accepted_by_gram = false;
    std::optional<SearchEntry> entry;
};

Outcome evaluate(const MixedMatrix& g, const SearchConfig& cfg, std::uint64_t trial) {
    Outcome out;
    const Code code(g);
    if (code.is_zero()) {
        out.verdict = Verdict::kZero;
        return out;
    }

    std::optional<bool> gram_ok;
    auto gram_holds = [&] {
        if (!gram_ok) gram_ok = gram_criterion(code);
        return *gram_ok;
    };
    std::optional<bool> lcd;
    for (const auto& f : cfg.filter_order) {
        if (f == "gram") {
            if (gram_holds()) {
                lcd = true;
                out.accepted_by_gram = true;
            }
        } else if (f == "lcd") {
            if (!lcd) lcd = is_lcd_ground_truth(code);
            if (!*lcd) {
                out.verdict = Verdict::kNotLcd;
                return out;
            }
        } else if (f == "row-unit") {
            if (!row_unit_condition(g)) return out;
        } else if (f == "gram-strict") {
            if (!gram_holds()) return out;
        }
    }
    // confirm regardless of how the candidate got here
    if (!is_lcd_ground_truth(code)) {
        if (lcd && *lcd) throw std::logic_error("search: Gram-accepted candidate failed the ground-truth test");
        out.verdict = Verdict::kNotLcd;
        return out;
    }

    MinDistance d;
    try {
        d = code.min_lee_distance(EnumLimits{cfg.distance_cap, 1});
    } catch (const CapExceeded&) {
        out.verdict = Verdict::kCap;
        return out;
    }
    SearchEntry e;
    e.n = code.gray_image().length();
    e.k = code.gray_image().dimension();
    e.d = d.value_or(0);
    e.generator = g;
    e.gram_invertible = gram_holds();
    e.row_unit = row_unit_condition(g);
    e.seed = cfg.seed;
    e.trial = trial;
    out.verdict = Verdict::kRecorded;
    out.entry = std::move(e);
    return out;
}

bool better(const SearchEntry& a, const SearchEntry& b) {
    if (a.d != b.d) return a.d > b.d;
    return compact_matrix(a.generator) < compact_matrix(b.generator);
}

}  // namespace

void validate_filters(const std::vector<std::string>& labels) {
    for (const auto& l : labels)
        if (l != "gram" && l != "lcd" && l != "row-unit" && l != "gram-strict")
            throw PreconditionError("unknown search filter '" + l + "'");
}

bool SearchRecord::offer(const SearchEntry& e) {
    const auto key = std::make_pair(e.n, e.k);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, e);
        return true;
    }
    if (!better(e, it->second)) return false;
    it->second = e;
    return true;
}

std::string to_json_line(const SearchEntry& e) {
    nlohmann::json j;
    j["n"] = e.n;
    j["k"] = e.k;
    j["d"] = e.d;
    j["matrix"] = compact_matrix(e.generator);
    j["gram_invertible"] = e.gram_invertible;
    j["row_unit"] = e.row_unit;
    j["seed"] = e.seed;
    j["trial"] = e.trial;
    return j.dump();
}

SearchEntry entry_from_json_line(std::string_view line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
        SearchEntry e;
        e.n = j.at("n").get<std::size_t>();
        e.k = j.at("k").get<std::size_t>();
        e.d = j.at("d").get<std::size_t>();
        e.generator = parse_compact_matrix(j.at("matrix").get<std::string>());
        e.gram_invertible = j.at("gram_invertible").get<bool>();
        e.row_unit = j.at("row_unit").get<bool>();
        e.seed = j.at("seed").get<std::uint64_t>();
        e.trial = j.at("trial").get<std::uint64_t>();
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("search record: ") + ex.what(), 0, 0);
    }
}

std::string SearchRecord::to_table() const {
    std::string out;
    for (const auto& [key, e] : entries_) out += to_json_line(e) + "\n";
    return out;
}

SearchRecord SearchRecord::from_table(std::string_view text) { return replay(text); }

SearchRecord SearchRecord::replay(std::string_view log) {
    SearchRecord r;
    std::istringstream in{std::string(log)};
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) r.offer(entry_from_json_line(line));
    return r;
}

MixedMatrix random_generator(Shape shape, std::size_t k, std::uint64_t seed, std::uint64_t trial) {
    BitSource bits(seed, trial);
    MixedMatrix g(shape);
    for (std::size_t r = 0; r < k; ++r) {
        MixedVector v(shape);
        for (std::size_t i = 0; i < shape.alpha; ++i) v.set_bin(i, bits.bit());
        for (std::size_t j = 0; j < shape.beta; ++j) {
            const bool s = bits.bit();
            v.set_ring(j, RingElem(s, bits.bit()));
        }
        g.push_back(std::move(v));
    }
    return g;
}

SearchResult run_search(const SearchConfig& cfg) {
    validate_filters(cfg.filter_order);
    if (cfg.k == 0) throw PreconditionError("search: k must be at least 1");
    if (cfg.inject && cfg.inject->shape() != cfg.shape) throw ShapeMismatch("search: injected matrix has wrong shape");

    SearchResult res;
    std::vector<Outcome> batch;
    for (std::uint64_t base = 0; base < cfg.trials; base += kBatch) {
        const std::uint64_t count = std::min(kBatch, cfg.trials - base);
        batch.assign(count, Outcome{});
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            for (std::uint64_t i = next++; i < count; i = next++) {
                const std::uint64_t trial = base + i;
                const MixedMatrix g = (trial == 0 && cfg.inject) ? *cfg.inject
                                                                 : random_generator(cfg.shape, cfg.k, cfg.seed, trial);
                batch[i] = evaluate(g, cfg, trial);
            }
        };
        const unsigned jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(cfg.jobs, 1, count));
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
        }

        for (const auto& o : batch) {
            ++res.counters.trials;
            if (o.accepted_by_gram) ++res.counters.accepted_by_gram;
            switch (o.verdict) {
                case Verdict::kZero: ++res.counters.zero_code; break;
                case Verdict::kFiltered: ++res.counters.filtered; break;
                case Verdict::kNotLcd: ++res.counters.not_lcd; break;
                case Verdict::kCap: ++res.counters.cap_exceeded; break;
                case Verdict::kRecorded:
                    ++res.counters.recorded;
                    res.log += to_json_line(*o.entry) + "\n";
                    res.record.offer(*o.entry);
                    break;
            }
        }
    }
    return res;
}

}  // namespace z2r
