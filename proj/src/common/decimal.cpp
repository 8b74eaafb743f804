// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/common/decimal.hpp"

#include <algorithm>
#include <numeric>

#include "irsim/common/error.hpp"

namespace irsim {
namespace {

using Raw = Decimal::Raw;

constexpr Raw pow10(int n) {
  Raw r = 1;
  for (int i = 0; i < n; ++i) r *= 10;
  return r;
}

constexpr Raw kOne = pow10(Decimal::kScale);

Raw absRaw(Raw v) { return v < 0 ? -v : v; }

// Integer division rounding half away from zero. Divisor must be positive.
Raw divRoundHalfUp(Raw numerator, Raw divisor) {
  const bool negative = numerator < 0;
  const Raw n = absRaw(numerator);
  Raw q = n / divisor;
  const Raw r = n % divisor;
  if (r >= divisor - r) ++q;
  return negative ? -q : q;
}

Raw checkedMul(Raw a, Raw b) {
  Raw out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::InvalidArgument, "decimal overflow");
  }
  return out;
}

std::string rawToDigits(Raw v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

YearFraction operator+(const YearFraction& a, const YearFraction& b) {
  if (a.denominator == b.denominator) {
    return {a.numerator + b.numerator, a.denominator};
  }
  return {a.numerator * b.denominator + b.numerator * a.denominator,
          a.denominator * b.denominator};
}

bool operator==(const YearFraction& a, const YearFraction& b) {
  return static_cast<Raw>(a.numerator) * b.denominator ==
         static_cast<Raw>(b.numerator) * a.denominator;
}

std::strong_ordering operator<=>(const YearFraction& a, const YearFraction& b) {
  // Denominators are positive by construction.
  return static_cast<Raw>(a.numerator) * b.denominator <=>
         static_cast<Raw>(b.numerator) * a.denominator;
}

Decimal Decimal::fromInt(std::int64_t value) { return fromRaw(checkedMul(value, kOne)); }

Decimal Decimal::parse(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::InvalidArgument, "malformed decimal '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  Raw integral = 0;
  int integralDigits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    integral = checkedMul(integral, 10) + (text[i] - '0');
    ++integralDigits;
    ++i;
  }
  Raw fraction = 0;
  int fractionDigits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      if (fractionDigits == kScale) throw fail();
      fraction = fraction * 10 + (text[i] - '0');
      ++fractionDigits;
      ++i;
    }
  }
  if (i != text.size() || integralDigits + fractionDigits == 0) throw fail();
  Raw raw = checkedMul(integral, kOne) + fraction * pow10(kScale - fractionDigits);
  return fromRaw(negative ? -raw : raw);
}

double Decimal::toDouble() const {
  return static_cast<double>(raw_ / kOne) +
         static_cast<double>(raw_ % kOne) / static_cast<double>(kOne);
}

std::string Decimal::toString() const {
  const Raw magnitude = absRaw(raw_);
  std::string out = raw_ < 0 ? "-" : "";
  out += rawToDigits(magnitude / kOne);
  std::string frac = rawToDigits(magnitude % kOne);
  frac.insert(0, static_cast<std::size_t>(kScale) - frac.size(), '0');
  while (frac.size() > 2 && frac.back() == '0') frac.pop_back();
  out += '.';
  out += frac;
  return out;
}

Decimal Decimal::roundHalfUp(int places) const {
  if (places < 0 || places > kScale) {
    throw Error(ErrorCode::InvalidArgument, "rounding places out of range");
  }
  const Raw step = pow10(kScale - places);
  return fromRaw(divRoundHalfUp(raw_, step) * step);
}

int Decimal::fractionalDigits() const {
  Raw frac = absRaw(raw_) % kOne;
  if (frac == 0) return 0;
  int digits = kScale;
  while (frac % 10 == 0) {
    frac /= 10;
    --digits;
  }
  return digits;
}

Decimal operator*(Decimal a, Decimal b) {
  return Decimal::fromRaw(divRoundHalfUp(checkedMul(a.raw_, b.raw_), kOne));
}

Decimal accrue(Decimal notional, Decimal rate, YearFraction fraction, int places) {
  if (fraction.denominator <= 0) {
    throw Error(ErrorCode::InvalidArgument, "year fraction denominator must be positive");
  }
  if (places < 0 || places > Decimal::kScale) {
    throw Error(ErrorCode::InvalidArgument, "rounding places out of range");
  }
  // notional.raw * rate.raw carries 2*kScale fractional digits.
  const Raw product = checkedMul(checkedMul(notional.raw(), rate.raw()), fraction.numerator);
  const Raw divisor = checkedMul(fraction.denominator, pow10(2 * Decimal::kScale - places));
  const Raw units = divRoundHalfUp(product, divisor);
  return Decimal::fromRaw(checkedMul(units, pow10(Decimal::kScale - places)));
}

}  // namespace irsim
