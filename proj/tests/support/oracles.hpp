// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

// Reference computations written without the library's Date, Decimal or
// day-count code, so that agreement with them means something.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace irsim::oracle {

struct Ymd {
  int y;
  int m;
  int d;
};

inline bool leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

inline int monthLength(int y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && leap(y) ? 29 : kDays[m - 1];
}

inline Ymd parseYmd(const std::string& s) {
  return {std::stoi(s.substr(0, 4)), std::stoi(s.substr(5, 2)), std::stoi(s.substr(8, 2))};
}

/// Counts days by stepping one calendar day at a time.
inline std::int64_t countDays(Ymd a, const Ymd& b) {
  std::int64_t n = 0;
  while (a.y != b.y || a.m != b.m || a.d != b.d) {
    if (++a.d > monthLength(a.y, a.m)) {
      a.d = 1;
      if (++a.m > 12) {
        a.m = 1;
        ++a.y;
      }
    }
    if (++n > 100000) throw std::logic_error("countDays ran past its bound");
  }
  return n;
}

/// 0 = Sunday; Zeller's congruence.
inline int weekday(const Ymd& d) {
  int y = d.y;
  int m = d.m;
  if (m < 3) {
    m += 12;
    --y;
  }
  const int k = y % 100;
  const int j = y / 100;
  const int h = (d.d + 13 * (m + 1) / 5 + k + k / 4 + j / 4 + 5 * j) % 7;  // 0 = Saturday
  return (h + 6) % 7;
}

/// Decimal string as (integer, power of ten), e.g. "0.02" -> (2, 2).
inline std::pair<__int128, int> scaled(const std::string& s) {
  __int128 v = 0;
  int scale = 0;
  bool frac = false;
  bool neg = false;
  for (char c : s) {
    if (c == '-') {
      neg = true;
    } else if (c == '.') {
      frac = true;
    } else {
      v = v * 10 + (c - '0');
      if (frac) ++scale;
    }
  }
  return {neg ? -v : v, scale};
}

inline __int128 pow10(int n) {
  __int128 p = 1;
  while (n-- > 0) p *= 10;
  return p;
}

/// notional * rate * days / basis in cents, half away from zero, as "X.YY".
inline std::string amount(const std::string& notional, const std::string& rate, std::int64_t days,
                          std::int64_t basis) {
  const auto [n, ns] = scaled(notional);
  const auto [r, rs] = scaled(rate);
  const __int128 num = n * r * days * 100;
  const __int128 den = pow10(ns + rs) * basis;
  const bool neg = (num < 0) != (den < 0);
  const __int128 an = num < 0 ? -num : num;
  __int128 cents = an / den;
  if ((an % den) * 2 >= den) ++cents;
  const auto whole = static_cast<long long>(cents / 100);
  const auto part = static_cast<int>(cents % 100);
  std::string out = std::to_string(whole) + "." + (part < 10 ? "0" : "") + std::to_string(part);
  return neg && cents != 0 ? "-" + out : out;
}

/// Sum of two decimal strings, for rate + spread.
inline std::string add(const std::string& a, const std::string& b) {
  auto [x, xs] = scaled(a);
  auto [y, ys] = scaled(b);
  const int s = xs > ys ? xs : ys;
  x *= pow10(s - xs);
  y *= pow10(s - ys);
  __int128 v = x + y;
  const bool neg = v < 0;
  if (neg) v = -v;
  std::string digits;
  do {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  } while (v > 0);
  while (static_cast<int>(digits.size()) <= s) digits.insert(digits.begin(), '0');
  if (s > 0) digits.insert(digits.end() - s, '.');
  return neg ? "-" + digits : digits;
}

}  // namespace irsim::oracle
