// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "irsim/cdm/types.hpp"

namespace irsim::lifecycle {

/// Rolls `date` onto a good business day. NoHolidays treats every day as
/// good; WeekendsOnly treats Saturday and Sunday as holidays.
Date adjustDate(const Date& date, cdm::BusinessDayConvention convention,
                cdm::BusinessCalendar calendar);

bool isBusinessDay(const Date& date, cdm::BusinessCalendar calendar);

struct CalculationPeriod {
  Date unadjustedStart;
  Date unadjustedEnd;
  Date adjustedStart;
  Date adjustedEnd;
  Date paymentDate;
  int periodIndex = 0;

  friend bool operator==(const CalculationPeriod&, const CalculationPeriod&) = default;
};

/// Regular schedule rolled forward from the effective date. Boundary i is
/// effectiveDate + i * frequency months (so end-of-month rolls do not drift),
/// adjusted under the schedule's convention. Payment is on the adjusted end.
/// Throws Error(InvalidSchedule) when the dates do not form a whole number
/// of periods.
std::vector<CalculationPeriod> generateSchedule(const cdm::CalculationPeriodDates& dates);

}  // namespace irsim::lifecycle
