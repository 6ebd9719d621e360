#include "subspace_sets/text.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "subspace_sets/errors.hpp"

namespace subspace_sets::text {

std::string format_g17(double value) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string format_fixed(double value, int digits) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(std::string_view field, std::size_t line_no) {
  // from_chars rejects a leading '+', which some exporters emit.
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw ParseError(line_no, "not a number: '" + std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line_no, "non-finite value: '" + std::string(field) + "'");
  }
  return value;
}

std::size_t parse_size(std::string_view field, std::size_t line_no) {
  std::size_t value = 0;
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), last, value);
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw ParseError(line_no, "not a non-negative integer: '" +
                                  std::string(field) + "'");
  }
  return value;
}

std::string_view chomp(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace subspace_sets::text
