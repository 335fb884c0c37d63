#pragma once

/**
 * @file matrix_io.hpp
 * @brief Matrix file format.
 *
 * JSON: {"rows": R, "cols": C, "data": [...], "modulus": P (optional)} with
 * R*C row-major entries. Entries are integers given as JSON numbers or
 * decimal strings; numbers are only accepted up to 2^53 in magnitude, larger
 * values must be strings. Output follows the same rule.
 *
 * Plain text: first line "R C", then R lines of C whitespace-separated
 * decimal integers. Text files cannot carry a modulus.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "commat/matrix.hpp"

namespace commat {

struct MatrixFile {
    Matrix<Integer> entries;
    std::optional<std::uint64_t> modulus;
};

/// Detects JSON by a leading '{'. Throws ParseError (or ShapeError for a bad R*C count).
MatrixFile parse_matrix(std::string_view text);
MatrixFile read_matrix_file(const std::string& path);

/// Compact JSON with keys in the order rows, cols, data[, modulus], newline-terminated.
std::string format_matrix_json(const Matrix<Integer>& m, std::optional<std::uint64_t> modulus = std::nullopt);

}  // namespace commat
