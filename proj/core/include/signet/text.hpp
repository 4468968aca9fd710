#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace signet {

std::vector<std::string> split(std::string_view line, char sep);
std::string_view trim(std::string_view s);

// Strict numeric parsing: the whole (trimmed) field must be consumed.
double parse_double(std::string_view s);
long long parse_int(std::string_view s);

// Shortest decimal that parses back to exactly the same double.
std::string format_shortest(double v);

std::string format_fixed(double v, int decimals);

// Fixed-point with trailing zeros (and a dangling '.') stripped.
std::string format_trimmed(double v, int decimals);

}  // namespace signet
