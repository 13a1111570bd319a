#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "z2r/code.hpp"
#include "z2r/lcd.hpp"

namespace z2r {

struct CodeReport {
    CodeType type;
    std::size_t gray_n = 0;
    std::size_t gray_k = 0;
    /// Set when the distance enumeration ran; its value is the zero-code marker or d.
    std::optional<MinDistance> gray_d;
    std::optional<std::size_t> gray_d_upper_bound;
    LcdReport lcd;
};

CodeReport make_report(const Code& c, const EnumLimits& limits);

/// Exact decimal 2^e.
std::string pow2_decimal(std::size_t e);

std::string to_text(const CodeReport& r);
nlohmann::json to_record(const CodeReport& r);

std::string format_distance(const MinDistance& d);

}  // namespace z2r
