#include "z2r/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "z2r/errors.hpp"

namespace z2r {

namespace {

std::size_t parse_header_value(std::string_view tok, std::string_view key, std::size_t line, std::size_t col) {
    if (tok.substr(0, key.size()) != key || tok.size() == key.size())
        throw ParseError("malformed header: expected '" + std::string(key) + "<int>', got '" + std::string(tok) + "'",
                         line, col);
    std::size_t v = 0;
    const char* first = tok.data() + key.size();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) throw ParseError("shape overflow in header", line, col);
    if (ec != std::errc() || ptr != last)
        throw ParseError("malformed header: bad integer '" + std::string(tok) + "'", line, col);
    if (v > kMaxTextColumns) throw ParseError("shape overflow: " + std::string(tok), line, col);
    return v;
}

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

bool skippable(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

MixedVector parse_row(std::string_view line, Shape shape, std::size_t lineno) {
    MixedVector v(shape);
    std::size_t i = 0, j = 0;
    bool bar = false;
    std::size_t last_col = 1;
    for (const auto& [tok, col] : split(line)) {
        last_col = col;
        if (tok == "|") {
            if (bar) throw ParseError("second '|' in row", lineno, col);
            if (i != shape.alpha)
                throw ParseError("ragged row: " + std::to_string(i) + " binary entries, expected " +
                                     std::to_string(shape.alpha),
                                 lineno, col);
            bar = true;
            continue;
        }
        if (tok.size() != 1) throw ParseError("unknown token '" + std::string(tok) + "'", lineno, col);
        if (!bar) {
            if (tok[0] != '0' && tok[0] != '1')
                throw ParseError("unknown binary token '" + std::string(tok) + "'", lineno, col);
            if (i == shape.alpha) throw ParseError("ragged row: too many binary entries", lineno, col);
            v.set_bin(i++, tok[0] == '1');
        } else {
            const auto r = ring_from_token(tok[0]);
            if (!r) throw ParseError("unknown token '" + std::string(tok) + "'", lineno, col);
            if (j == shape.beta) throw ParseError("ragged row: too many ring entries", lineno, col);
            v.set_ring(j++, *r);
        }
    }
    if (!bar) throw ParseError("missing '|' separator", lineno, last_col);
    if (j != shape.beta)
        throw ParseError("ragged row: " + std::to_string(j) + " ring entries, expected " + std::to_string(shape.beta),
                         lineno, last_col);
    return v;
}

}  // namespace

MixedMatrix parse_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<MixedMatrix> m;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        if (!m) {
            const auto toks = split(line);
            if (toks.size() != 2) throw ParseError("malformed header: expected 'alpha=<int> beta=<int>'", lineno, 1);
            const Shape sh{parse_header_value(toks[0].text, "alpha=", lineno, toks[0].column),
                           parse_header_value(toks[1].text, "beta=", lineno, toks[1].column)};
            if (sh.columns() == 0) throw ParseError("malformed header: alpha + beta must be positive", lineno, 1);
            m.emplace(sh);
            continue;
        }
        m->push_back(parse_row(line, m->shape(), lineno));
    }
    if (!m) throw ParseError("missing header", lineno, 0);
    return *std::move(m);
}

MixedMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_matrix(in);
}

MixedMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return parse_matrix(in);
}

std::string serialize_matrix(const MixedMatrix& m) {
    std::string out = "alpha=" + std::to_string(m.shape().alpha) + " beta=" + std::to_string(m.shape().beta) + "\n";
    for (const auto& row : m.row_list()) out += format_vector(row) + "\n";
    return out;
}

void write_matrix_file(const std::filesystem::path& path, const MixedMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << serialize_matrix(m);
}

std::string compact_matrix(const MixedMatrix& m) {
    std::string out = "alpha=" + std::to_string(m.shape().alpha) + " beta=" + std::to_string(m.shape().beta);
    for (const auto& row : m.row_list()) {
        out += ';';
        for (std::size_t i = 0; i < m.shape().alpha; ++i) out += row.bin(i) ? '1' : '0';
        out += '|';
        for (std::size_t j = 0; j < m.shape().beta; ++j) out += to_token(row.ring(j));
    }
    return out;
}

MixedMatrix parse_compact_matrix(std::string_view text) {
    std::string expanded;
    std::size_t start = 0;
    bool header = true;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view part = text.substr(start, end - start);
        if (header) {
            expanded += std::string(part) + "\n";
            header = false;
        } else {
            for (char c : part) {
                expanded += c;
                expanded += ' ';
            }
            expanded += '\n';
        }
        start = end + 1;
    }
    return parse_matrix(expanded);
}

MixedMatrix from_binary(const BinaryMatrix& b) {
    const Shape sh{b.cols(), 0};
    MixedMatrix m(sh);
    for (const auto& row : b.row_list()) m.push_back(MixedVector(row, BitVec(0), BitVec(0)));
    return m;
}

BinaryMatrix to_binary(const MixedMatrix& m) {
    if (m.shape().beta != 0) throw ShapeMismatch("expected a binary matrix (beta=0)");
    BinaryMatrix b(m.shape().alpha);
    for (const auto& row : m.row_list()) b.push_back(row.bin_plane());
    return b;
}

}  // namespace z2r
