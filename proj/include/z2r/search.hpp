#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "z2r/code.hpp"

namespace z2r {

/**
 * Filter labels, applied in order to every candidate:
 *   gram         Gram invertible over R; when it holds the candidate is LCD and `lcd` is skipped
 *   lcd          ground-truth LCD test; rejects non-LCD candidates
 *   row-unit     requires the row-unit condition
 *   gram-strict  requires an invertible Gram matrix
 * The ground-truth test always runs before a candidate is recorded, whether listed or not.
 */
struct SearchConfig {
    Shape shape;
    std::size_t k = 1;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::vector<std::string> filter_order = {"gram", "lcd"};
    unsigned distance_cap = 24;
    unsigned jobs = 1;
    /// Evaluated in place of the random matrix for trial 0.
    std::optional<MixedMatrix> inject;
};

/// Throws PreconditionError on an unknown label.
void validate_filters(const std::vector<std::string>& labels);

struct SearchEntry {
    std::size_t n = 0;
    std::size_t k = 0;  ///< Gray-image dimension
    std::size_t d = 0;
    MixedMatrix generator;
    bool gram_invertible = false;
    bool row_unit = false;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
};

/// Best-known table keyed by (n, k). An entry is replaced by a candidate with larger d, or equal d and a
/// lexicographically smaller compact matrix; the outcome does not depend on offer order among equals.
class SearchRecord {
public:
    /// Returns true when the table changed.
    bool offer(const SearchEntry& e);

    [[nodiscard]] const std::map<std::pair<std::size_t, std::size_t>, SearchEntry>& entries() const {
        return entries_;
    }
    [[nodiscard]] bool empty() const { return entries_.empty(); }

    /// Compacted table: one JSON object per line, sorted by (n, k).
    [[nodiscard]] std::string to_table() const;
    static SearchRecord from_table(std::string_view text);
    /// Rebuilds a table from an event log.
    static SearchRecord replay(std::string_view log);

private:
    std::map<std::pair<std::size_t, std::size_t>, SearchEntry> entries_;
};

std::string to_json_line(const SearchEntry& e);
SearchEntry entry_from_json_line(std::string_view line);

struct SearchCounters {
    std::uint64_t trials = 0;
    std::uint64_t zero_code = 0;
    std::uint64_t filtered = 0;  ///< rejected by a filter other than the ground truth
    std::uint64_t not_lcd = 0;
    std::uint64_t accepted_by_gram = 0;
    std::uint64_t cap_exceeded = 0;
    std::uint64_t recorded = 0;  ///< LCD candidates with a computed distance
};

struct SearchResult {
    SearchRecord record;
    SearchCounters counters;
    /// Append log: one line per recorded candidate, in trial order.
    std::string log;
};

/// Uniform i.i.d. entries, a pure function of (seed, trial).
MixedMatrix random_generator(Shape shape, std::size_t k, std::uint64_t seed, std::uint64_t trial);

SearchResult run_search(const SearchConfig& cfg);

}  // namespace z2r
