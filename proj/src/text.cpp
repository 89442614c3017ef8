#include "pielm/text.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace pielm {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

std::string_view trim(std::string_view text) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = text.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(ws);
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view text, std::string_view delims) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto stop = text.find_first_of(delims, start);
    const auto field =
        trim(text.substr(start, stop == std::string_view::npos
                                    ? std::string_view::npos
                                    : stop - start));
    if (!field.empty()) out.emplace_back(field);
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return out;
}

namespace {

bool parse_plain(std::string_view text, double& out) {
  text = trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, out);
  return ec == std::errc() && ptr == last;
}

// [-]pi, [-]k pi, [-]k*pi
bool parse_pi_multiple(std::string_view text, double& out) {
  text = trim(text);
  if (text.size() < 2 || text.substr(text.size() - 2) != "pi") return parse_plain(text, out);
  text = trim(text.substr(0, text.size() - 2));
  if (!text.empty() && text.back() == '*') text = trim(text.substr(0, text.size() - 1));
  double k = 1.0;
  if (text == "-") {
    k = -1.0;
  } else if (!text.empty() && text != "+" && !parse_plain(text, k)) {
    return false;
  }
  out = k * M_PI;
  return true;
}

}  // namespace

bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_pi_multiple(text, out);
  double num = 0.0, den = 0.0;
  if (!parse_pi_multiple(text.substr(0, slash), num) ||
      !parse_plain(text.substr(slash + 1), den) || den == 0.0) {
    return false;
  }
  out = num / den;
  return true;
}

bool parse_int(std::string_view text, long long& out) {
  text = trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace pielm
