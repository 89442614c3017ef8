#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pielm {

/// Shortest representation that parses back to the same double.
std::string format_number(double value);

std::string_view trim(std::string_view text);

/// Splits on any of the delimiter characters and trims each field; empty
/// fields are dropped.
std::vector<std::string> split(std::string_view text, std::string_view delims);

/// Strict parse of the whole (trimmed) string. Besides plain numbers it
/// accepts multiples and fractions of pi: "pi", "-3pi", "2*pi", "-pi/2".
/// Returns false on any trailing garbage.
bool parse_double(std::string_view text, double& out);
bool parse_int(std::string_view text, long long& out);

}  // namespace pielm
