#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace egonet {

using Timestamp = std::chrono::sys_seconds;
using Month = std::chrono::year_month;

inline constexpr double kSecondsPerDay = 86400.0;
inline constexpr double kDaysPerYear = 365.0;

// Accepts "YYYY-MM-DDTHH:MM:SS[.frac](Z|+HH:MM|-HH:MM)"; fractions are truncated.
// Throws Error(InvalidEvent) on malformed input.
Timestamp parse_rfc3339(std::string_view text);

// Always "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(Timestamp ts);

Month month_of(Timestamp ts);
Timestamp month_start(Month m);
int days_in_month(Month m);

// b - a, in whole months.
int months_between(Month a, Month b);

// "YYYY-MM".
std::string format_month(Month m);
Month parse_month(std::string_view text);

inline double days_between(Timestamp a, Timestamp b) {
  return static_cast<double>((b - a).count()) / kSecondsPerDay;
}

}  // namespace egonet
