#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace z2r {

enum class ClaimVerdict { kAgree, kDisagree, kNotApplicable };

const char* to_string(ClaimVerdict v);

/// One checkable statement from the published worked examples and theorems, re-computed.
struct PaperClaim {
    std::string id;           ///< e.g. EX4.1-PARAMS
    std::string location;     ///< where the statement is made
    std::string anchor;       ///< the claimed formula or value
    std::string description;
    std::string expected;
    std::string computed;
    ClaimVerdict verdict = ClaimVerdict::kNotApplicable;
    std::string note;
};

struct ClaimsConfig {
    std::filesystem::path fixture_dir;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    /// Random instances for the randomized laws.
    std::size_t random_codes = 200;
};

/// Throws z2r::Error when a fixture file is missing.
std::vector<PaperClaim> run_paper_claims(const ClaimsConfig& cfg);

std::string claims_to_text(const std::vector<PaperClaim>& claims);
nlohmann::json claim_to_record(const PaperClaim& c);

/// Displayed Gram matrices of the two long worked examples, rows of 0/1 characters.
extern const std::vector<std::string> kDisplayedGramEx41;
extern const std::vector<std::string> kDisplayedGramEx43;

}  // namespace z2r
