#ifndef COMPTEST_NUMERIC_HPP
#define COMPTEST_NUMERIC_HPP

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace comptest {

/// Dwell times and virtual clock readings. Integer microseconds keep step
/// arithmetic exact.
using Duration = std::chrono::microseconds;

/// Shortest round-trip rendering in fixed notation (never an exponent),
/// using `decimal_separator`. -0 renders as "0".
std::string format_number(double value, char decimal_separator = '.');

/// Parses a decimal number written with `decimal_separator`. Accepts an
/// optional sign, fraction and exponent ("1,00E+06"). The other separator
/// character, "inf", "nan" and trailing garbage are rejected.
std::optional<double> parse_number(std::string_view text,
                                   char decimal_separator = '.');

/// Exact decimal seconds, e.g. 500000us -> "0.5", 280s -> "280".
std::string format_seconds(Duration d, char decimal_separator = '.');

/// Rounds seconds to the microsecond grid; nullopt when not finite.
std::optional<Duration> seconds_to_duration(double seconds);

double to_seconds(Duration d);

}  // namespace comptest

#endif  // COMPTEST_NUMERIC_HPP
