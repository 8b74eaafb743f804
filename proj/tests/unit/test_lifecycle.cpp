// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <set>

#include "irsim/cdm/lineage.hpp"
#include "irsim/cdm/qualification.hpp"
#include "irsim/cdm/validation.hpp"
#include "irsim/lifecycle/day_count.hpp"
#include "irsim/lifecycle/deadlines.hpp"
#include "irsim/lifecycle/events.hpp"
#include "irsim/lifecycle/observation.hpp"
#include "irsim/lifecycle/schedule.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace irsim;
using namespace irsim::lifecycle;
using cdm::BusinessCalendar;
using cdm::BusinessDayConvention;
using cdm::DayCountConvention;
using irsim::testing::makeSwap;
using irsim::testing::SwapTerms;

namespace {

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an irsim::Error");
  return ErrorCode::InvalidArgument;
}

const DateTime kNow(Date(2024, 1, 10));

cdm::TradeState confirmed(const cdm::Trade& trade = makeSwap()) {
  const auto exec = createExecutionEvent(trade, kNow);
  return createContractFormationEvent(exec.primitives.back().after, kNow).primitives.back().after;
}

Date oracleAdjust(Date d, BusinessDayConvention bdc) {
  // Step with the weekday oracle rather than Date::isWeekend.
  auto weekend = [](const Date& x) {
    const int w = oracle::weekday(oracle::parseYmd(x.toString()));
    return w == 0 || w == 6;
  };
  if (bdc == BusinessDayConvention::None || !weekend(d)) return d;
  Date f = d;
  while (weekend(f)) f = f.addDays(1);
  if (bdc == BusinessDayConvention::Following || f.month() == d.month()) return f;
  Date p = d;
  while (weekend(p)) p = p.addDays(-1);
  return p;
}

}  // namespace

TEST_CASE("adjustDate") {
  CHECK(adjustDate(Date(2024, 6, 12), BusinessDayConvention::ModifiedFollowing,
                   BusinessCalendar::WeekendsOnly) == Date(2024, 6, 12));
  CHECK(adjustDate(Date(2024, 6, 15), BusinessDayConvention::Following,
                   BusinessCalendar::WeekendsOnly) == Date(2024, 6, 17));
  CHECK(adjustDate(Date(2024, 6, 30), BusinessDayConvention::ModifiedFollowing,
                   BusinessCalendar::WeekendsOnly) == Date(2024, 6, 28));
  CHECK(adjustDate(Date(2024, 6, 15), BusinessDayConvention::Following,
                   BusinessCalendar::NoHolidays) == Date(2024, 6, 15));
  CHECK(adjustDate(Date(2024, 6, 15), BusinessDayConvention::None,
                   BusinessCalendar::WeekendsOnly) == Date(2024, 6, 15));

  Date d(2023, 1, 1);
  for (int i = 0; i < 800; ++i, d = d.addDays(1)) {
    for (auto bdc : {BusinessDayConvention::None, BusinessDayConvention::Following,
                     BusinessDayConvention::ModifiedFollowing}) {
      REQUIRE(adjustDate(d, bdc, BusinessCalendar::WeekendsOnly) == oracleAdjust(d, bdc));
    }
  }
}

TEST_CASE("generateSchedule") {
  const cdm::CalculationPeriodDates q{Date(2024, 1, 15), Date(2025, 1, 15),
                                      cdm::PaymentFrequency::Quarterly, BusinessDayConvention::None,
                                      BusinessCalendar::NoHolidays};
  const auto periods = generateSchedule(q);
  REQUIRE(periods.size() == 4);
  const Date bounds[] = {Date(2024, 1, 15), Date(2024, 4, 15), Date(2024, 7, 15),
                         Date(2024, 10, 15), Date(2025, 1, 15)};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(periods[i].unadjustedStart == bounds[i]);
    CHECK(periods[i].unadjustedEnd == bounds[i + 1]);
    CHECK(periods[i].paymentDate == periods[i].adjustedEnd);
    CHECK(periods[i].periodIndex == static_cast<int>(i));
  }

  auto annual = q;
  annual.frequency = cdm::PaymentFrequency::Annual;
  CHECK(generateSchedule(annual).size() == 1);

  auto empty = q;
  empty.terminationDate = empty.effectiveDate;
  CHECK(codeOf([&] { generateSchedule(empty); }) == ErrorCode::InvalidSchedule);
  auto ragged = q;
  ragged.terminationDate = Date(2024, 12, 1);
  CHECK(codeOf([&] { generateSchedule(ragged); }) == ErrorCode::InvalidSchedule);
}

TEST_CASE("schedules tile their span") {
  std::mt19937_64 rng(11);
  const cdm::PaymentFrequency freqs[] = {cdm::PaymentFrequency::Monthly, cdm::PaymentFrequency::Quarterly,
                                         cdm::PaymentFrequency::SemiAnnual, cdm::PaymentFrequency::Annual};
  for (int i = 0; i < 500; ++i) {
    const auto freq = freqs[rng() % 4];
    const Date eff = Date(2020, 1, 1).addDays(static_cast<std::int64_t>(rng() % 2000));
    const int n = static_cast<int>(rng() % 12) + 1;
    const cdm::CalculationPeriodDates dates{eff, eff.addMonths(n * cdm::frequencyMonths(freq)), freq,
                                            BusinessDayConvention::ModifiedFollowing,
                                            BusinessCalendar::WeekendsOnly};
    if (!cdm::isRegularSchedule(dates)) continue;  // month-end clamping
    const auto periods = generateSchedule(dates);
    REQUIRE(periods.size() == static_cast<std::size_t>(n));
    REQUIRE(periods.front().unadjustedStart == dates.effectiveDate);
    REQUIRE(periods.back().unadjustedEnd == dates.terminationDate);
    for (std::size_t k = 0; k + 1 < periods.size(); ++k) {
      REQUIRE(periods[k].unadjustedEnd == periods[k + 1].unadjustedStart);
    }
    for (const auto& p : periods) REQUIRE(p.adjustedStart < p.adjustedEnd);
  }
}

TEST_CASE("day count fractions") {
  CHECK(dayCountFraction(Date(2024, 1, 15), Date(2024, 4, 15), DayCountConvention::Act360) ==
        YearFraction{91, 360});
  CHECK(dayCountFraction(Date(2024, 1, 30), Date(2024, 7, 30), DayCountConvention::Thirty360US) ==
        YearFraction{1, 2});
  CHECK(dayCountFraction(Date(2024, 1, 15), Date(2025, 1, 15), DayCountConvention::Act365F) ==
        YearFraction{366, 365});
  for (auto c : {DayCountConvention::Act360, DayCountConvention::Act365F,
                 DayCountConvention::Thirty360US}) {
    CHECK(dayCountFraction(Date(2024, 3, 1), Date(2024, 3, 1), c) == YearFraction{0, 1});
    CHECK(codeOf([&] { dayCountFraction(Date(2024, 3, 2), Date(2024, 3, 1), c); }) ==
          ErrorCode::InvalidInterval);
  }
  // US 30/360 end-of-month capping.
  CHECK(dayCountFraction(Date(2024, 1, 31), Date(2024, 3, 31), DayCountConvention::Thirty360US) ==
        YearFraction{60, 360});
  CHECK(dayCountFraction(Date(2024, 1, 15), Date(2024, 3, 31), DayCountConvention::Thirty360US) ==
        YearFraction{76, 360});
}

TEST_CASE("ACT fractions are additive and match the day-stepping oracle") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Date a = Date(2023, 1, 1).addDays(static_cast<std::int64_t>(rng() % 700));
    const Date b = a.addDays(static_cast<std::int64_t>(rng() % 200));
    const Date c = b.addDays(static_cast<std::int64_t>(rng() % 200));
    for (auto conv : {DayCountConvention::Act360, DayCountConvention::Act365F}) {
      REQUIRE(dayCountFraction(a, b, conv) + dayCountFraction(b, c, conv) ==
              dayCountFraction(a, c, conv));
    }
    const auto days = oracle::countDays(oracle::parseYmd(a.toString()), oracle::parseYmd(c.toString()));
    REQUIRE(dayCountFraction(a, c, DayCountConvention::Act360) == YearFraction{days, 360});
  }
}

TEST_CASE("cashflow amounts") {
  const auto n = Decimal::fromInt(10'000'000);
  CHECK(fixedAmount(n, Decimal::parse("0.02"), {1, 4}).toString() == "50000.00");
  CHECK(fixedAmount(n, Decimal::parse("0.02"), {0, 1}).toString() == "0.00");
  CHECK(fixedAmount(n, Decimal::parse("0.02"), {91, 360}).toString() == "50555.56");
  CHECK(floatingAmount(n, Decimal::parse("0.03"), Decimal{}, {1, 4}).toString() == "75000.00");
  CHECK(floatingAmount(n, Decimal{}, Decimal{}, {1, 4}).toString() == "0.00");
  CHECK(floatingAmount(n, Decimal::parse("0.03"), Decimal::parse("0.001"), {1, 2}).toString() ==
        "155000.00");
}

TEST_CASE("amounts are monotone in each argument") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto n = Decimal::fromInt(static_cast<std::int64_t>(rng() % 100'000'000));
    const auto r = Decimal::fromRaw(static_cast<Decimal::Raw>(rng() % 100'000'000'000ULL));
    const YearFraction f{static_cast<std::int64_t>(rng() % 400), 360};
    const auto base = fixedAmount(n, r, f);
    REQUIRE(fixedAmount(n + Decimal::fromInt(1), r, f) >= base);
    REQUIRE(fixedAmount(n, r + Decimal::parse("0.0001"), f) >= base);
    REQUIRE(fixedAmount(n, r, f + YearFraction{1, 360}) >= base);
  }
}

TEST_CASE("rate resolver") {
  const Date d(2024, 1, 15);
  const auto a = resolveObservation("SIM-IBOR", 3, d, 42);
  CHECK(a == resolveObservation("SIM-IBOR", 3, d, 42));
  CHECK(a.index == "SIM-IBOR");
  CHECK(a.observationDate == d);
  // Pinned so that any change to the generator is noticed.
  CHECK(a.rate.toString() == "0.04012");
  CHECK(resolveObservation("SIM-IBOR", 3, d, 43).rate != a.rate);
  CHECK(codeOf([&] { resolveObservation("SIM-IBOR", 0, d, 42); }) == ErrorCode::InvalidArgument);

  std::set<Decimal> distinct;
  for (int i = 0; i < 100; ++i) {
    const auto r = resolveObservation("SIM-IBOR", 3, d.addDays(i), 42).rate;
    distinct.insert(r);
    REQUIRE(r >= Decimal{});
    REQUIRE(r < Decimal::parse("0.10"));
    REQUIRE(r.fractionalDigits() <= 5);
  }
  CHECK(distinct.size() >= 95);
}

TEST_CASE("business event constructors") {
  const auto trade = makeSwap();
  const auto exec = createExecutionEvent(trade, kNow);
  REQUIRE(exec.primitives.size() == 1);
  CHECK(exec.qualifiedType == cdm::BusinessEventType::Execution);
  CHECK(!exec.primitives[0].before);
  CHECK(exec.primitives[0].after.status == cdm::TradeStatus::Executed);

  SwapTerms zero;
  zero.notional = "0";
  CHECK(codeOf([&] { createExecutionEvent(makeSwap(zero), kNow); }) == ErrorCode::InvalidTrade);

  const auto executed = exec.primitives[0].after;
  const auto formed = createContractFormationEvent(executed, kNow);
  CHECK(formed.qualifiedType == cdm::BusinessEventType::ContractFormation);
  CHECK(formed.primitives[0].before == executed);
  const auto state = formed.primitives[0].after;
  CHECK(state.status == cdm::TradeStatus::Confirmed);
  CHECK(codeOf([&] { createContractFormationEvent(state, kNow); }) == ErrorCode::InvalidTransition);
  auto rejected = executed;
  rejected.status = cdm::TradeStatus::Rejected;
  CHECK(codeOf([&] { createContractFormationEvent(rejected, kNow); }) == ErrorCode::InvalidTransition);

  const auto obs1 = resolveObservation("SIM-IBOR", 3, Date(2024, 1, 15), 42);
  const auto reset1 = createResetEvent(state, obs1, kNow);
  CHECK(reset1.qualifiedType == cdm::BusinessEventType::Reset);
  const auto afterReset1 = reset1.primitives[0].after;
  CHECK(afterReset1.resetHistory.size() == 1);
  const auto obs2 = resolveObservation("SIM-IBOR", 3, Date(2024, 4, 15), 42);
  const auto afterReset2 = createResetEvent(afterReset1, obs2, kNow).primitives[0].after;
  REQUIRE(afterReset2.resetHistory.size() == 2);
  CHECK(afterReset2.resetHistory[0].observationDate < afterReset2.resetHistory[1].observationDate);
  auto wrongIndex = obs1;
  wrongIndex.index = "OTHER";
  CHECK(codeOf([&] { createResetEvent(state, wrongIndex, kNow); }) == ErrorCode::InvalidTransition);
  CHECK(codeOf([&] { createResetEvent(executed, obs1, kNow); }) == ErrorCode::InvalidTransition);

  cdm::Transfer transfer{"T-1/FIXED/0", "P-1", "P-2", Decimal::parse("50555.56"), "USD",
                         Date(2024, 4, 15), cdm::TransferStatus::Instructed};
  const auto cash = createCashTransferEvent(state, transfer, kNow);
  CHECK(cash.qualifiedType == cdm::BusinessEventType::CashTransfer);
  REQUIRE(cash.primitives[0].after.transferHistory.size() == 1);
  CHECK(cash.primitives[0].after.transferHistory[0].status == cdm::TransferStatus::Settled);
  auto third = transfer;
  third.receiverPartyRef = "P-3";
  CHECK(codeOf([&] { createCashTransferEvent(state, third, kNow); }) == ErrorCode::InvalidTransition);
  auto nothing = transfer;
  nothing.amount = Decimal{};
  CHECK(createCashTransferEvent(state, nothing, kNow).primitives[0].after.transferHistory.size() == 1);

  // Every constructor output extends the lineage and re-qualifies.
  const std::vector<cdm::BusinessEvent> chain{exec, formed, reset1, createCashTransferEvent(afterReset1, transfer, kNow)};
  CHECK(cdm::checkLineage(chain).ok);
  for (const auto& e : chain) CHECK(cdm::qualifyBusinessEvent(e.primitives) == e.qualifiedType);
  for (const auto& e : chain) {
    for (const auto& p : e.primitives) CHECK(cdm::isPermittedChange(p));
  }
}

TEST_CASE("deadline projection") {
  const auto deadlines = projectDeadlines(confirmed());
  REQUIRE(deadlines.size() == 12);
  int resets = 0, fixed = 0, floating = 0;
  for (const auto& d : deadlines) {
    CHECK(d.status == DeadlineStatus::Open);
    CHECK(d.dueTime.timeOfDay() == kDeadlineTimeOfDay);
    resets += d.kind == DeadlineKind::Reset;
    fixed += d.kind == DeadlineKind::FixedPayment;
    floating += d.kind == DeadlineKind::FloatingPayment;
  }
  CHECK(resets == 4);
  CHECK(fixed == 4);
  CHECK(floating == 4);
  for (std::size_t i = 0; i + 1 < deadlines.size(); ++i) {
    CHECK(deadlineBefore(deadlines[i], deadlines[i + 1]));
  }
  CHECK(deadlines[0].deadlineId == "T-1/RESET/0");
  CHECK(deadlines[0].dueTime == DateTime(Date(2024, 1, 15)));
  CHECK(deadlineName(deadlines[0]) == "Reset period 0 (Floating)");
  CHECK(deadlineName(deadlines.back()) == "Payment period 3 (Floating)");
  // Resets precede the floating payment of the same period.
  for (const auto& r : deadlines) {
    if (r.kind != DeadlineKind::Reset) continue;
    for (const auto& p : deadlines) {
      if (p.kind == DeadlineKind::FloatingPayment && p.periodIndex == r.periodIndex) {
        CHECK(r.dueTime < p.dueTime);
      }
    }
  }

  SwapTerms annual;
  annual.fixedFrequency = cdm::PaymentFrequency::Annual;
  annual.floatingFrequency = cdm::PaymentFrequency::Annual;
  annual.tenorMonths = 12;
  CHECK(projectDeadlines(confirmed(makeSwap(annual))).size() == 3);

  const auto executed = createExecutionEvent(makeSwap(), kNow).primitives[0].after;
  CHECK(codeOf([&] { projectDeadlines(executed); }) == ErrorCode::InvalidTransition);
  CHECK(projectDeadlines(confirmed()) == deadlines);
}
