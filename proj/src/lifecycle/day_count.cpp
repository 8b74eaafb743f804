// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/lifecycle/day_count.hpp"

#include "irsim/common/error.hpp"

namespace irsim::lifecycle {

YearFraction dayCountFraction(const Date& start, const Date& end, cdm::DayCountConvention convention) {
  if (end < start) {
    throw Error(ErrorCode::InvalidInterval,
                "interval start " + start.toString() + " is after end " + end.toString());
  }
  switch (convention) {
    case cdm::DayCountConvention::Act360:
      return {daysBetween(start, end), 360};
    case cdm::DayCountConvention::Act365F:
      return {daysBetween(start, end), 365};
    case cdm::DayCountConvention::Thirty360US: {
      int d1 = static_cast<int>(start.day());
      int d2 = static_cast<int>(end.day());
      if (d1 == 31) d1 = 30;
      if (d2 == 31 && d1 >= 30) d2 = 30;
      const std::int64_t days = 360LL * (end.year() - start.year()) +
                                30LL * (static_cast<int>(end.month()) - static_cast<int>(start.month())) +
                                (d2 - d1);
      return {days, 360};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown day count convention");
}

Decimal fixedAmount(Decimal notional, Decimal rate, YearFraction dcf) {
  return accrue(notional, rate, dcf, 2);
}

Decimal floatingAmount(Decimal notional, Decimal observedRate, Decimal spread, YearFraction dcf) {
  return accrue(notional, observedRate + spread, dcf, 2);
}

Decimal periodAmount(const cdm::InterestRatePayout& leg, const CalculationPeriod& period,
                     std::optional<Decimal> observedRate) {
  const auto dcf = dayCountFraction(period.adjustedStart, period.adjustedEnd, leg.dayCount);
  if (const auto* fixed = std::get_if<cdm::FixedRate>(&leg.rate)) {
    return fixedAmount(leg.notional, fixed->rate, dcf);
  }
  if (!observedRate) {
    throw Error(ErrorCode::ResetMissing,
                "floating period " + std::to_string(period.periodIndex) + " has not been reset");
  }
  return floatingAmount(leg.notional, *observedRate, std::get<cdm::FloatingRate>(leg.rate).spread, dcf);
}

}  // namespace irsim::lifecycle
