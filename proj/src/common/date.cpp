// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/common/date.hpp"

#include <algorithm>
#include <cstdio>

#include "irsim/common/error.hpp"

namespace irsim {
namespace {

namespace ch = std::chrono;

int parseDigits(std::string_view text, std::size_t pos, std::size_t count) {
  if (pos + count > text.size()) return -1;
  int value = 0;
  for (std::size_t i = pos; i < pos + count; ++i) {
    if (text[i] < '0' || text[i] > '9') return -1;
    value = value * 10 + (text[i] - '0');
  }
  return value;
}

ch::year_month_day toYmd(ch::sys_days d) { return ch::year_month_day{d}; }

}  // namespace

Date::Date(int y, unsigned m, unsigned d) {
  const ch::year_month_day ymd{ch::year{y}, ch::month{m}, ch::day{d}};
  if (!ymd.ok()) {
    throw Error(ErrorCode::InvalidArgument, "invalid calendar date");
  }
  days_ = ch::sys_days{ymd};
}

Date Date::parse(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    throw Error(ErrorCode::InvalidArgument, "expected YYYY-MM-DD, got '" + std::string(text) + "'");
  }
  const int y = parseDigits(text, 0, 4);
  const int m = parseDigits(text, 5, 2);
  const int d = parseDigits(text, 8, 2);
  if (y < 0 || m < 0 || d < 0) {
    throw Error(ErrorCode::InvalidArgument, "expected YYYY-MM-DD, got '" + std::string(text) + "'");
  }
  return Date(y, static_cast<unsigned>(m), static_cast<unsigned>(d));
}

int Date::year() const { return static_cast<int>(toYmd(days_).year()); }
unsigned Date::month() const { return static_cast<unsigned>(toYmd(days_).month()); }
unsigned Date::day() const { return static_cast<unsigned>(toYmd(days_).day()); }
unsigned Date::weekday() const { return std::chrono::weekday{days_}.c_encoding(); }

bool Date::isWeekend() const {
  const unsigned wd = weekday();
  return wd == 0 || wd == 6;
}

bool Date::isLastDayOfMonth() const {
  const auto ymd = toYmd(days_);
  return ymd.day() == ch::year_month_day_last{ymd.year(), ch::month_day_last{ymd.month()}}.day();
}

Date Date::addDays(std::int64_t n) const { return Date(days_ + ch::days{n}); }

Date Date::addMonths(int n) const {
  const auto ymd = toYmd(days_);
  const ch::year_month target = ch::year_month{ymd.year(), ymd.month()} + ch::months{n};
  const auto last =
      ch::year_month_day_last{target.year(), ch::month_day_last{target.month()}}.day();
  const auto d = ymd.day() > last ? last : ymd.day();
  return Date(ch::sys_days{ch::year_month_day{target.year(), target.month(), d}});
}

std::string Date::toString() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year(), month(), day());
  return buf;
}

std::int64_t daysBetween(const Date& a, const Date& b) { return b.serial() - a.serial(); }

int monthsBetween(const Date& a, const Date& b) {
  return (b.year() - a.year()) * 12 + static_cast<int>(b.month()) - static_cast<int>(a.month());
}

DateTime::DateTime(Date date, std::chrono::seconds timeOfDay) : date_(date), time_(timeOfDay) {
  if (timeOfDay < ch::seconds{0} || timeOfDay >= ch::hours{24}) {
    throw Error(ErrorCode::InvalidArgument, "time of day out of range");
  }
}

DateTime DateTime::parse(std::string_view text) {
  const Date date = Date::parse(text.substr(0, std::min<std::size_t>(text.size(), 10)));
  if (text.size() == 10) return DateTime(date);
  auto fail = [&] {
    return Error(ErrorCode::InvalidArgument,
                 "expected YYYY-MM-DDTHH:MM[:SS], got '" + std::string(text) + "'");
  };
  if ((text.size() != 16 && text.size() != 19) || (text[10] != 'T' && text[10] != ' ') ||
      text[13] != ':') {
    throw fail();
  }
  const int h = parseDigits(text, 11, 2);
  const int m = parseDigits(text, 14, 2);
  int s = 0;
  if (text.size() == 19) {
    if (text[16] != ':') throw fail();
    s = parseDigits(text, 17, 2);
  }
  if (h < 0 || h > 23 || m < 0 || m > 59 || s < 0 || s > 59) throw fail();
  return DateTime(date, ch::hours{h} + ch::minutes{m} + ch::seconds{s});
}

std::string DateTime::toString() const {
  const auto total = time_.count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "T%02lld:%02lld:%02lld", static_cast<long long>(total / 3600),
                static_cast<long long>(total / 60 % 60), static_cast<long long>(total % 60));
  return date_.toString() + buf;
}

}  // namespace irsim
