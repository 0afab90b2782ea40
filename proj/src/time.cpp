#include "egonet/time.hpp"

#include <charconv>
#include <cstdio>

#include "egonet/error.hpp"

namespace egonet {

namespace {

using namespace std::chrono;

int read_digits(std::string_view text, std::size_t pos, std::size_t count) {
  if (pos + count > text.size()) {
    throw Error(ErrorCode::InvalidEvent, "timestamp truncated: '" + std::string(text) + "'");
  }
  int value = 0;
  auto first = text.data() + pos;
  auto [ptr, ec] = std::from_chars(first, first + count, value);
  if (ec != std::errc() || ptr != first + count) {
    throw Error(ErrorCode::InvalidEvent, "timestamp has non-digit field: '" + std::string(text) + "'");
  }
  return value;
}

void expect(std::string_view text, std::size_t pos, std::string_view allowed) {
  if (pos >= text.size() || allowed.find(text[pos]) == std::string_view::npos) {
    throw Error(ErrorCode::InvalidEvent, "malformed timestamp: '" + std::string(text) + "'");
  }
}

}  // namespace

Timestamp parse_rfc3339(std::string_view text) {
  const int y = read_digits(text, 0, 4);
  expect(text, 4, "-");
  const int mo = read_digits(text, 5, 2);
  expect(text, 7, "-");
  const int d = read_digits(text, 8, 2);
  expect(text, 10, "Tt ");
  const int hh = read_digits(text, 11, 2);
  expect(text, 13, ":");
  const int mm = read_digits(text, 14, 2);
  expect(text, 16, ":");
  const int ss = read_digits(text, 17, 2);

  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t digits_from = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits_from) {
      throw Error(ErrorCode::InvalidEvent, "empty fractional seconds: '" + std::string(text) + "'");
    }
  }

  int offset_minutes = 0;
  expect(text, pos, "Zz+-");
  if (text[pos] == 'Z' || text[pos] == 'z') {
    ++pos;
  } else {
    const int sign = text[pos] == '-' ? -1 : 1;
    const int oh = read_digits(text, pos + 1, 2);
    expect(text, pos + 3, ":");
    const int om = read_digits(text, pos + 4, 2);
    if (oh > 23 || om > 59) {
      throw Error(ErrorCode::InvalidEvent, "offset out of range: '" + std::string(text) + "'");
    }
    offset_minutes = sign * (oh * 60 + om);
    pos += 6;
  }
  if (pos != text.size()) {
    throw Error(ErrorCode::InvalidEvent, "trailing characters in timestamp: '" + std::string(text) + "'");
  }

  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || hh > 23 || mm > 59 || ss > 60) {
    throw Error(ErrorCode::InvalidEvent, "timestamp field out of range: '" + std::string(text) + "'");
  }
  // A leap second folds onto the following second.
  return sys_days{ymd} + hours{hh} + minutes{mm} + seconds{ss} - minutes{offset_minutes};
}

std::string format_rfc3339(Timestamp ts) {
  const auto day_point = floor<days>(ts);
  const year_month_day ymd{day_point};
  const hh_mm_ss tod{ts - day_point};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02lldZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<long>(tod.hours().count()), static_cast<long>(tod.minutes().count()),
                static_cast<long long>(tod.seconds().count()));
  return buf;
}

Month month_of(Timestamp ts) {
  const year_month_day ymd{floor<days>(ts)};
  return ymd.year() / ymd.month();
}

Timestamp month_start(Month m) { return sys_days{m / 1}; }

int days_in_month(Month m) {
  return static_cast<int>((sys_days{(m + months{1}) / 1} - sys_days{m / 1}).count());
}

int months_between(Month a, Month b) { return static_cast<int>((b - a).count()); }

std::string format_month(Month m) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u", static_cast<int>(m.year()), static_cast<unsigned>(m.month()));
  return buf;
}

Month parse_month(std::string_view text) {
  if (text.size() != 7 || text[4] != '-') {
    throw Error(ErrorCode::InvalidArgument, "expected YYYY-MM, got '" + std::string(text) + "'");
  }
  const int y = read_digits(text, 0, 4);
  const int mo = read_digits(text, 5, 2);
  const Month m = year{y} / month{static_cast<unsigned>(mo)};
  if (!m.ok()) throw Error(ErrorCode::InvalidArgument, "month out of range: '" + std::string(text) + "'");
  return m;
}

}  // namespace egonet
