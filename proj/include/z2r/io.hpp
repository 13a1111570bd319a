#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "z2r/linalg.hpp"

namespace z2r {

/// Upper bound on alpha and beta accepted from text input.
inline constexpr std::size_t kMaxTextColumns = std::size_t{1} << 16;

/**
 * Matrix text format:
 *
 *     alpha=2 beta=3
 *     1 0 | 0 u u
 *     0 1 | 1 u u
 *
 * Blank lines and lines starting with '#' are ignored. Errors are ParseError with 1-based line and column.
 */
MixedMatrix parse_matrix(std::istream& in);
MixedMatrix parse_matrix(std::string_view text);
MixedMatrix read_matrix_file(const std::filesystem::path& path);

/// Canonical text; parse_matrix(serialize_matrix(m)) == m.
std::string serialize_matrix(const MixedMatrix& m);
void write_matrix_file(const std::filesystem::path& path, const MixedMatrix& m);

/// One-line form `alpha=A beta=B;<row>;<row>...` with rows as `0101|uv10`.
std::string compact_matrix(const MixedMatrix& m);
MixedMatrix parse_compact_matrix(std::string_view text);

/// Binary matrices travel as beta = 0 mixed matrices.
MixedMatrix from_binary(const BinaryMatrix& b);
BinaryMatrix to_binary(const MixedMatrix& m);

}  // namespace z2r
