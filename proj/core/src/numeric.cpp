#include "comptest/numeric.hpp"

#include <array>
#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>

namespace comptest {

std::string format_number(double value, char decimal_separator) {
  if (value == 0.0) return "0";
  std::array<char, 400> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed);
  if (ec != std::errc{}) {
    // Only reachable for non-finite values.
    return std::isnan(value) ? "nan" : (value < 0 ? "-inf" : "inf");
  }
  std::string out(buf.data(), end);
  if (decimal_separator != '.') {
    for (char& c : out) {
      if (c == '.') c = decimal_separator;
    }
  }
  return out;
}

std::optional<double> parse_number(std::string_view text,
                                   char decimal_separator) {
  const char other = decimal_separator == '.' ? ',' : '.';
  if (text.empty()) return std::nullopt;
  std::string buf(text);
  if (buf.front() == '+') buf.erase(0, 1);
  if (buf.empty()) return std::nullopt;
  const std::size_t first = buf.front() == '-' ? 1 : 0;
  if (first >= buf.size()) return std::nullopt;
  const unsigned char lead = static_cast<unsigned char>(buf[first]);
  if (!std::isdigit(lead) && buf[first] != decimal_separator) {
    return std::nullopt;
  }
  for (char& c : buf) {
    if (c == other) return std::nullopt;
    if (c == decimal_separator) c = '.';
  }
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(buf.data(), buf.data() + buf.size(), value,
                      std::chars_format::general);
  if (ec != std::errc{} || ptr != buf.data() + buf.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::string format_seconds(Duration d, char decimal_separator) {
  std::int64_t us = d.count();
  std::string sign;
  if (us < 0) {
    sign = "-";
    us = -us;
  }
  std::string out = sign + std::to_string(us / 1'000'000);
  std::int64_t frac = us % 1'000'000;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 6 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += decimal_separator;
    out += digits;
  }
  return out;
}

std::optional<Duration> seconds_to_duration(double seconds) {
  if (!std::isfinite(seconds)) return std::nullopt;
  const double us = std::round(seconds * 1e6);
  if (std::fabs(us) > 9.0e18) return std::nullopt;
  return Duration{static_cast<std::int64_t>(us)};
}

double to_seconds(Duration d) { return static_cast<double>(d.count()) / 1e6; }

}  // namespace comptest
