// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace irsim {

/// Exact rational year fraction, e.g. 91/360. Kept as a ratio so that
/// day-count fractions add without rounding.
struct YearFraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  double toDouble() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }

  friend YearFraction operator+(const YearFraction& a, const YearFraction& b);
  friend bool operator==(const YearFraction& a, const YearFraction& b);
  friend std::strong_ordering operator<=>(const YearFraction& a, const YearFraction& b);
};

/// Fixed-point decimal with twelve fractional digits held in a 128-bit
/// integer. Addition and subtraction are exact; multiplication rounds the
/// thirteenth digit half away from zero.
class Decimal {
 public:
  using Raw = __int128;
  static constexpr int kScale = 12;

  constexpr Decimal() = default;

  static constexpr Decimal fromRaw(Raw raw) {
    Decimal d;
    d.raw_ = raw;
    return d;
  }
  static Decimal fromInt(std::int64_t value);
  /// Parses an optionally signed plain decimal literal ("-12.5", "0.02").
  /// Throws Error(InvalidArgument) on malformed input or more than twelve
  /// fractional digits.
  static Decimal parse(std::string_view text);

  Raw raw() const { return raw_; }
  double toDouble() const;

  /// Canonical text: at least two fractional digits, trailing zeros beyond
  /// the second trimmed. "50000.00", "0.02", "0.031".
  std::string toString() const;

  /// Rounds half away from zero to `places` fractional digits (0..12).
  Decimal roundHalfUp(int places) const;
  /// Number of significant fractional digits (0..12).
  int fractionalDigits() const;

  bool isZero() const { return raw_ == 0; }
  bool isNegative() const { return raw_ < 0; }

  friend Decimal operator+(Decimal a, Decimal b) { return fromRaw(a.raw_ + b.raw_); }
  friend Decimal operator-(Decimal a, Decimal b) { return fromRaw(a.raw_ - b.raw_); }
  friend Decimal operator-(Decimal a) { return fromRaw(-a.raw_); }
  friend Decimal operator*(Decimal a, Decimal b);
  Decimal& operator+=(Decimal other) {
    raw_ += other.raw_;
    return *this;
  }

  friend bool operator==(const Decimal&, const Decimal&) = default;
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
    return a.raw_ <=> b.raw_;
  }

 private:
  Raw raw_ = 0;
};

/// notional * rate * fraction rounded half away from zero to `places`
/// decimals in a single step, with no intermediate rounding.
Decimal accrue(Decimal notional, Decimal rate, YearFraction fraction, int places);

}  // namespace irsim
