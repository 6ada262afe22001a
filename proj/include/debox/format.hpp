#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace debox {

// Real serialized with 17 significant digits — enough for exact double
// round-trips — in the C locale regardless of the process locale.
std::string format_real(double value);

// Fixed-precision decimal ("%.*f"), for pixel coordinates and other output
// that must be byte-stable across platforms.
std::string format_fixed(double value, int decimals);

// Strict parsers; `where` names the location (file:line:column) in errors.
double parse_real(const std::string& text, const std::string& where);
std::int64_t parse_int(const std::string& text, const std::string& where);
std::uint64_t parse_uint(const std::string& text, const std::string& where);

// Splits one CSV line on commas. Fields in this project never contain
// commas or quotes, so no quoting dialect is needed (and none is accepted).
std::vector<std::string> split_csv_line(const std::string& line);

// Comma-separated list helpers for CLI flags like --t-grid 0.01,0.1.
std::vector<double> parse_real_list(const std::string& text, const std::string& what);
std::vector<int> parse_int_list(const std::string& text, const std::string& what);

}  // namespace debox
