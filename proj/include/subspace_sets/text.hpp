#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Small helpers shared by the plain-text readers and writers.

namespace subspace_sets::text {

/// Shortest form that round-trips through strtod: %.17g.
std::string format_g17(double value);

/// Fixed-point with `digits` decimals, e.g. format_fixed(0.5, 9) = "0.500000000".
std::string format_fixed(double value, int digits);

/// Split on runs of spaces/tabs; empty fields are dropped.
std::vector<std::string_view> split_whitespace(std::string_view line);

/// Split on every occurrence of `sep`, keeping empty fields.
std::vector<std::string_view> split(std::string_view line, char sep);

/// Parses a finite double occupying the whole field; throws ParseError(line_no).
double parse_double(std::string_view field, std::size_t line_no);

/// Parses a non-negative integer occupying the whole field.
std::size_t parse_size(std::string_view field, std::size_t line_no);

/// Strips a trailing '\r' left by CRLF files.
std::string_view chomp(std::string_view line);

}  // namespace subspace_sets::text
