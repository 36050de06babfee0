#pragma once

#include <string>
#include <string_view>

#include "unimod/int_matrix.hpp"

namespace unimod {

/// Parses the plain-text matrix format:
///
///     k n
///     a11 a12 ... a1n
///     ...
///     ak1 ak2 ... akn
///
/// Integers are base-10 with an optional leading '-', separated by spaces
/// or tabs. Blank lines and lines whose first non-blank character is '#'
/// are ignored. Throws ParseError with 1-based line/column.
IntMatrix parse_matrix_file(std::string_view text);

IntMatrix read_matrix_file(const std::string& path);

/// Inverse of parse_matrix_file.
std::string format_matrix_file(const IntMatrix& m);

} // namespace unimod
