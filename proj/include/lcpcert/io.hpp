#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcpcert/matrix.hpp"

namespace lcpcert {

/// Parses one numeric token: a decimal literal or a fraction "p/q" of two
/// integers (the division is performed once, in double precision).
/// Throws ParseError(line, column) on malformed or non-finite input.
double parse_number(std::string_view token, std::size_t line = 1, std::size_t column = 1);

/// Matrix file contents, auto-detected by the presence of a comma:
///   plain text  "n" followed by n*n whitespace-separated numbers, row-major;
///   CSV         n lines of n comma-separated numbers, no header.
/// Throws ParseError, NonSquare or EmptyFile.
Matrix parse_matrix_text(std::string_view text, const std::string& source = "<input>");
Matrix parse_matrix(const std::string& path);

/// Vector file contents: CSV (numbers separated by commas and/or newlines) when
/// a comma is present, otherwise "n" followed by n whitespace-separated numbers.
Vector parse_vector_text(std::string_view text, const std::string& source = "<input>");
Vector parse_vector(const std::string& path);

/// Plain-text dump ("n" line, then one row per line) using the shortest
/// decimal form that round-trips each double exactly.
std::string format_matrix(const Matrix& m);

/// Shortest round-trip decimal form; "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double v);

}  // namespace lcpcert
