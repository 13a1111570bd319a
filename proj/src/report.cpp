#include "z2r/report.hpp"

#include <sstream>

#include "z2r/errors.hpp"

namespace z2r {

CodeReport make_report(const Code& c, const EnumLimits& limits) {
    CodeReport r;
    r.type = c.type();
    r.gray_n = c.gray_image().length();
    r.gray_k = c.gray_image().dimension();
    try {
        r.gray_d = c.min_lee_distance(limits);
    } catch (const CapExceeded& e) {
        r.gray_d_upper_bound = e.upper_bound();
    }
    r.lcd = analyze_lcd(c);
    return r;
}

std::string pow2_decimal(std::size_t e) {
    std::string digits = "1";  // little-endian
    for (std::size_t i = 0; i < e; ++i) {
        int carry = 0;
        for (auto& d : digits) {
            const int v = (d - '0') * 2 + carry;
            d = static_cast<char>('0' + v % 10);
            carry = v / 10;
        }
        if (carry) digits += static_cast<char>('0' + carry);
    }
    return {digits.rbegin(), digits.rend()};
}

std::string format_distance(const MinDistance& d) { return d ? std::to_string(*d) : "none"; }

std::string to_text(const CodeReport& r) {
    std::ostringstream o;
    const auto& t = r.type;
    o << "type        (" << t.alpha << "," << t.beta << "," << t.k0 << "," << t.k1 << "," << t.k2 << ")\n";
    o << "size        " << pow2_decimal(t.log2_size()) << " = 2^" << t.log2_size() << "\n";
    o << "gray image  [" << r.gray_n << "," << r.gray_k << ",";
    if (r.gray_d)
        o << format_distance(*r.gray_d);
    else if (r.gray_d_upper_bound)
        o << "<=" << *r.gray_d_upper_bound << " (cap exceeded)";
    else
        o << "? (cap exceeded)";
    o << "]\n";
    const auto& l = r.lcd;
    o << "lcd                     " << (l.is_lcd ? "yes" : "no") << "  (" << l.method_used << ")\n";
    o << "gram invertible         " << (l.gram_invertible ? "yes" : "no") << "\n";
    o << "row-unit condition      " << (l.row_unit_condition ? "yes" : "no") << "\n";
    o << "r-independent rows      " << (l.r_independent ? (*l.r_independent ? "yes" : "no") : "unverified") << "\n";
    o << "separable sufficient    " << to_string(l.separable_sufficient) << "\n";
    return o.str();
}

nlohmann::json to_record(const CodeReport& r) {
    nlohmann::json j;
    j["alpha"] = r.type.alpha;
    j["beta"] = r.type.beta;
    j["k0"] = r.type.k0;
    j["k1"] = r.type.k1;
    j["k2"] = r.type.k2;
    j["size"] = pow2_decimal(r.type.log2_size());
    j["gray_n"] = r.gray_n;
    j["gray_k"] = r.gray_k;
    if (r.gray_d && *r.gray_d)
        j["gray_d"] = **r.gray_d;
    else
        j["gray_d"] = nullptr;
    if (r.gray_d_upper_bound) j["gray_d_upper_bound"] = *r.gray_d_upper_bound;
    j["lcd"] = r.lcd.is_lcd;
    j["gram_invertible"] = r.lcd.gram_invertible;
    j["row_unit"] = r.lcd.row_unit_condition;
    if (r.lcd.r_independent)
        j["r_independent"] = *r.lcd.r_independent;
    else
        j["r_independent"] = nullptr;
    j["separable_sufficient"] = to_string(r.lcd.separable_sufficient);
    j["lcd_method"] = r.lcd.method_used;
    return j;
}

}  // namespace z2r
