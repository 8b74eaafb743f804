// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <compare>
#include <string>
#include <string_view>

namespace irsim {

/// Calendar date with no time zone.
class Date {
 public:
  Date() = default;
  Date(int year, unsigned month, unsigned day);
  explicit Date(std::chrono::sys_days days) : days_(days) {}

  /// "YYYY-MM-DD"; throws Error(InvalidArgument) otherwise.
  static Date parse(std::string_view text);

  int year() const;
  unsigned month() const;
  unsigned day() const;
  /// 0 = Sunday ... 6 = Saturday.
  unsigned weekday() const;
  bool isWeekend() const;
  bool isLastDayOfMonth() const;

  std::chrono::sys_days sysDays() const { return days_; }
  std::int64_t serial() const { return days_.time_since_epoch().count(); }

  Date addDays(std::int64_t n) const;
  /// Calendar month arithmetic, clamping the day to the target month's end.
  Date addMonths(int n) const;

  std::string toString() const;

  friend bool operator==(const Date&, const Date&) = default;
  friend auto operator<=>(const Date&, const Date&) = default;

 private:
  std::chrono::sys_days days_{};
};

/// Actual days from `a` to `b` (negative when b < a).
std::int64_t daysBetween(const Date& a, const Date& b);

/// Whole calendar months from `a` to `b`, ignoring the day of month.
int monthsBetween(const Date& a, const Date& b);

/// Date plus time of day in the single simulated zone, second resolution.
class DateTime {
 public:
  DateTime() = default;
  DateTime(Date date, std::chrono::seconds timeOfDay = std::chrono::seconds{0});

  /// "YYYY-MM-DDTHH:MM" or "YYYY-MM-DDTHH:MM:SS"; a bare date means midnight.
  static DateTime parse(std::string_view text);

  const Date& date() const { return date_; }
  std::chrono::seconds timeOfDay() const { return time_; }

  /// Always "YYYY-MM-DDTHH:MM:SS".
  std::string toString() const;

  friend bool operator==(const DateTime&, const DateTime&) = default;
  friend auto operator<=>(const DateTime&, const DateTime&) = default;

 private:
  Date date_;
  std::chrono::seconds time_{0};
};

}  // namespace irsim
