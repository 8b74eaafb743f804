// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "irsim/cdm/types.hpp"
#include "irsim/lifecycle/schedule.hpp"

namespace irsim::lifecycle {

/// Exact year fraction between two dates.
///   ACT_360       actual days / 360
///   ACT_365F      actual days / 365
///   THIRTY_360_US (360*dY + 30*dM + dD) / 360, with a start day of 31
///                 moved to 30, and an end day of 31 moved to 30 when the
///                 (adjusted) start day is 30 or 31.
/// Throws Error(InvalidInterval) when start > end.
YearFraction dayCountFraction(const Date& start, const Date& end, cdm::DayCountConvention convention);

/// notional * rate * dcf, rounded half-up to cents.
Decimal fixedAmount(Decimal notional, Decimal rate, YearFraction dcf);

/// notional * (observedRate + spread) * dcf, rounded half-up to cents.
Decimal floatingAmount(Decimal notional, Decimal observedRate, Decimal spread, YearFraction dcf);

/// Signed amount the leg's payer owes for one period, accrued between the
/// adjusted period dates. Floating legs need the observed rate; without it
/// this throws Error(ResetMissing).
Decimal periodAmount(const cdm::InterestRatePayout& leg, const CalculationPeriod& period,
                     std::optional<Decimal> observedRate = std::nullopt);

}  // namespace irsim::lifecycle
