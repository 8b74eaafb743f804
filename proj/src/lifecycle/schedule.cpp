// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/lifecycle/schedule.hpp"

#include "irsim/cdm/validation.hpp"
#include "irsim/common/error.hpp"

namespace irsim::lifecycle {

using cdm::BusinessCalendar;
using cdm::BusinessDayConvention;

bool isBusinessDay(const Date& date, BusinessCalendar calendar) {
  return calendar == BusinessCalendar::NoHolidays || !date.isWeekend();
}

Date adjustDate(const Date& date, BusinessDayConvention convention, BusinessCalendar calendar) {
  if (convention == BusinessDayConvention::None || isBusinessDay(date, calendar)) return date;
  Date following = date;
  while (!isBusinessDay(following, calendar)) following = following.addDays(1);
  if (convention == BusinessDayConvention::Following || following.month() == date.month()) {
    return following;
  }
  Date preceding = date;
  while (!isBusinessDay(preceding, calendar)) preceding = preceding.addDays(-1);
  return preceding;
}

std::vector<CalculationPeriod> generateSchedule(const cdm::CalculationPeriodDates& dates) {
  if (!cdm::isRegularSchedule(dates)) {
    throw Error(ErrorCode::InvalidSchedule,
                "schedule " + dates.effectiveDate.toString() + " -> " +
                    dates.terminationDate.toString() +
                    " is not a positive whole number of periods");
  }
  const int step = cdm::frequencyMonths(dates.frequency);
  const int count = monthsBetween(dates.effectiveDate, dates.terminationDate) / step;
  auto adjust = [&](const Date& d) {
    return adjustDate(d, dates.businessDayConvention, dates.calendar);
  };

  std::vector<CalculationPeriod> periods;
  periods.reserve(static_cast<std::size_t>(count));
  Date start = dates.effectiveDate;
  for (int i = 0; i < count; ++i) {
    const Date end = i + 1 == count ? dates.terminationDate
                                    : dates.effectiveDate.addMonths((i + 1) * step);
    CalculationPeriod p;
    p.unadjustedStart = start;
    p.unadjustedEnd = end;
    p.adjustedStart = adjust(start);
    p.adjustedEnd = adjust(end);
    p.paymentDate = p.adjustedEnd;
    p.periodIndex = i;
    periods.push_back(p);
    start = end;
  }
  return periods;
}

}  // namespace irsim::lifecycle
