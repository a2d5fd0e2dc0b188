#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tb {

// Shortest exact representation: parses back to the identical double.
std::string format_exact(double v);

// Fixed significant digits, for human-facing reports. Deterministic,
// locale-independent.
std::string format_g(double v, int digits);

// strtod on the full string; throws ValidationError on trailing garbage.
double parse_double(std::string_view s);
long long parse_int(std::string_view s);

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
// Splits on any run of whitespace, dropping empty tokens.
std::vector<std::string> split_ws(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);

}  // namespace tb
