// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <random>

#include "irsim/cdm/json.hpp"
#include "irsim/cdm/lineage.hpp"
#include "irsim/cdm/qualification.hpp"
#include "irsim/cdm/validation.hpp"
#include "irsim/lifecycle/events.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace irsim;
using namespace irsim::cdm;
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

PrimitiveEvent primitive(PrimitiveKind kind) {
  PrimitiveEvent p;
  p.kind = kind;
  p.after.trade = makeSwap();
  return p;
}

}  // namespace

TEST_CASE("decimal parse and canonical text") {
  CHECK(Decimal::parse("10000000").toString() == "10000000.00");
  CHECK(Decimal::parse("0.02").toString() == "0.02");
  CHECK(Decimal::parse("0.031").toString() == "0.031");
  CHECK(Decimal::parse("-1.5").toString() == "-1.50");
  CHECK(Decimal::parse("1.230000").toString() == "1.23");
  CHECK(Decimal::parse("0.02") + Decimal::parse("0.001") == Decimal::parse("0.021"));
  CHECK(Decimal::parse("2.5") * Decimal::parse("4") == Decimal::fromInt(10));
  CHECK(codeOf([] { Decimal::parse("1e5"); }) == ErrorCode::InvalidArgument);
  CHECK(codeOf([] { Decimal::parse(""); }) == ErrorCode::InvalidArgument);
  CHECK(codeOf([] { Decimal::parse("0.1234567890123"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("decimal rounds half away from zero") {
  CHECK(Decimal::parse("0.005").roundHalfUp(2) == Decimal::parse("0.01"));
  CHECK(Decimal::parse("0.0049").roundHalfUp(2) == Decimal::parse("0.00"));
  CHECK(Decimal::parse("-0.005").roundHalfUp(2) == Decimal::parse("-0.01"));
  CHECK(Decimal::parse("2.675").roundHalfUp(2) == Decimal::parse("2.68"));
}

TEST_CASE("accrue matches the integer oracle on random inputs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto notional = std::to_string(rng() % 1'000'000'000 + 1);
    const std::string rate = "0.0" + std::to_string(rng() % 100000);
    const auto days = static_cast<std::int64_t>(rng() % 400);
    const std::int64_t basis = i % 2 ? 360 : 365;
    const auto got = accrue(Decimal::parse(notional), Decimal::parse(rate), {days, basis}, 2);
    INFO(notional << " " << rate << " " << days << "/" << basis);
    REQUIRE(got.toString() == oracle::amount(notional, rate, days, basis));
  }
}

TEST_CASE("year fractions compare exactly") {
  CHECK(YearFraction{1, 4} == YearFraction{90, 360});
  CHECK(YearFraction{91, 360} > YearFraction{1, 4});
  CHECK(YearFraction{1, 4} + YearFraction{1, 4} == YearFraction{1, 2});
}

TEST_CASE("calendar dates") {
  CHECK(Date::parse("2024-02-29").toString() == "2024-02-29");
  CHECK(codeOf([] { Date::parse("2023-02-29"); }) == ErrorCode::InvalidArgument);
  CHECK(codeOf([] { Date::parse("2024-1-5"); }) == ErrorCode::InvalidArgument);
  CHECK(Date(2024, 1, 31).addMonths(1) == Date(2024, 2, 29));
  CHECK(Date(2024, 6, 15).isWeekend());
  CHECK(!Date(2024, 6, 12).isWeekend());
  CHECK(daysBetween(Date(2024, 1, 15), Date(2024, 4, 15)) == 91);
  CHECK(DateTime::parse("2024-01-10T09:00").toString() == "2024-01-10T09:00:00");
  CHECK(DateTime::parse("2024-01-10") == DateTime(Date(2024, 1, 10)));
  CHECK(codeOf([] { DateTime::parse("2024-01-10T25:00"); }) == ErrorCode::InvalidArgument);

  // Day counts and weekdays against the stepping oracle.
  Date d(2023, 11, 3);
  for (int i = 0; i < 900; ++i, d = d.addDays(1)) {
    const auto ymd = oracle::parseYmd(d.toString());
    REQUIRE(static_cast<int>(d.weekday()) == oracle::weekday(ymd));
    REQUIRE(daysBetween(Date(2023, 11, 3), d) == oracle::countDays({2023, 11, 3}, ymd));
  }
}

TEST_CASE("validation of tradable products") {
  CHECK(validateTrade(makeSwap()).ok());

  SwapTerms zero;
  zero.notional = "0";
  const auto zeroReport = validateTradableProduct(makeSwap(zero).tradableProduct);
  CHECK(zeroReport.violations == std::vector<std::string>{violation::kNonPositiveNotional});

  auto stranger = makeSwap();
  std::get<InterestRatePayout>(stranger.tradableProduct.product.payouts[0]).payerPartyRef = "P-99";
  CHECK(validateTradableProduct(stranger.tradableProduct).contains(violation::kUnresolvedParty));

  auto self = makeSwap();
  auto& leg = std::get<InterestRatePayout>(self.tradableProduct.product.payouts[0]);
  leg.receiverPartyRef = leg.payerPartyRef;
  CHECK(validateTradableProduct(self.tradableProduct).contains(violation::kPayerIsReceiver));

  SwapTerms backwards;
  backwards.termination = backwards.effective;
  CHECK(validateTradableProduct(makeSwap(backwards).tradableProduct).contains(violation::kDateOrder));

  SwapTerms ragged;
  ragged.termination = Date(2024, 12, 1);
  CHECK(validateTradableProduct(makeSwap(ragged).tradableProduct).contains(violation::kPeriodMultiple));

  auto noId = makeSwap();
  noId.tradeId.clear();
  CHECK(validateTrade(noId).contains(violation::kMissingTradeId));
}

TEST_CASE("product qualification") {
  const auto trade = makeSwap();
  const auto fixed = trade.tradableProduct.product.payouts[0];
  const auto floating = trade.tradableProduct.product.payouts[1];
  const Payout equity = EquityPayout{"P-1", "P-2", "ACME"};

  CHECK(qualifyProduct(Product{{fixed, floating}}) == ProductQualification::InterestRateSwapFixedFloat);
  CHECK(qualifyProduct(Product{{floating, floating}}) == ProductQualification::InterestRateBasisSwap);
  CHECK(qualifyProduct(Product{{floating, equity}}) == ProductQualification::EquitySwap);
  CHECK(qualifyProduct(Product{{fixed}}) == ProductQualification::Unqualified);
  CHECK(qualifyProduct(Product{{fixed, fixed}}) == ProductQualification::Unqualified);
  CHECK(qualifyProduct(Product{{fixed, floating, equity}}) == ProductQualification::Unqualified);
  CHECK(qualifyProduct(Product{}) == ProductQualification::Unqualified);
}

TEST_CASE("business event qualification") {
  const std::vector<std::pair<PrimitiveKind, BusinessEventType>> single = {
      {PrimitiveKind::Execution, BusinessEventType::Execution},
      {PrimitiveKind::ContractFormation, BusinessEventType::ContractFormation},
      {PrimitiveKind::Reset, BusinessEventType::Reset},
      {PrimitiveKind::Transfer, BusinessEventType::CashTransfer}};
  for (const auto& [kind, type] : single) {
    const std::vector<PrimitiveEvent> ps{primitive(kind)};
    CHECK(qualifyBusinessEvent(ps) == type);
    CHECK(qualifyBusinessEvent(ps, std::string("ANY_INTENT")) == type);
  }
  const std::vector<PrimitiveEvent> pair{primitive(PrimitiveKind::Execution),
                                         primitive(PrimitiveKind::Transfer)};
  CHECK(qualifyBusinessEvent(pair) == BusinessEventType::Unqualified);
  CHECK(codeOf([] { qualifyBusinessEvent(std::vector<PrimitiveEvent>{}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("trade status admits only the three edges") {
  const TradeStatus all[] = {TradeStatus::Executed, TradeStatus::Confirmed, TradeStatus::Rejected,
                             TradeStatus::Matured};
  int permitted = 0;
  for (auto from : all) {
    for (auto to : all) {
      const bool expected = (from == TradeStatus::Executed && to == TradeStatus::Confirmed) ||
                            (from == TradeStatus::Executed && to == TradeStatus::Rejected) ||
                            (from == TradeStatus::Confirmed && to == TradeStatus::Matured);
      CHECK(isPermittedTransition(from, to) == expected);
      permitted += expected;
    }
  }
  CHECK(permitted == 3);
}

TEST_CASE("lineage of a two-link chain") {
  const DateTime t(Date(2024, 1, 10));
  const auto exec = lifecycle::createExecutionEvent(makeSwap(), t);
  const auto formed = lifecycle::createContractFormationEvent(exec.primitives.back().after, t);
  std::vector<BusinessEvent> chain{exec, formed};
  CHECK(checkLineage(chain).ok);

  chain[1].primitives[0].before->status = TradeStatus::Rejected;
  const auto report = checkLineage(chain);
  CHECK(!report.ok);
  CHECK(report.breakIndex == std::optional<std::size_t>{1});
  CHECK(report.eventIndex == std::optional<std::size_t>{1});

  // The chain must open with an execution.
  CHECK(!checkLineage(std::vector<BusinessEvent>{formed}).ok);
}

TEST_CASE("canonical JSON round trip of a trade") {
  const auto trade = makeSwap();
  const Json j = trade;
  const auto text = j.dump();
  const auto back = Json::parse(text).get<Trade>();
  CHECK(back == trade);
  CHECK(Json(back).dump() == text);
  CHECK(j["tradableProduct"]["product"]["payouts"][0]["interestRatePayout"]["notional"] ==
        "10000000.00");
  CHECK(j["tradableProduct"]["counterparties"][0]["role"] == "PARTY_1");
  CHECK(j["tradableProduct"]["priceQuantitySummary"]["fixedRate"] == "0.02");

  const auto exec = lifecycle::createExecutionEvent(trade, DateTime(Date(2024, 1, 10)));
  const Json ej = exec;
  CHECK(!ej["primitives"][0].contains("before"));
  CHECK(!ej.contains("intent"));
  CHECK(ej["qualifiedType"] == "EXECUTION");
  CHECK(Json::parse(ej.dump()).get<BusinessEvent>() == exec);
}

TEST_CASE("JSON parse errors surface as InvalidArgument") {
  Json j = makeSwap();
  j["tradableProduct"]["product"]["payouts"][0]["interestRatePayout"]["dayCount"] = "ACT_999";
  CHECK(codeOf([&] { j.get<Trade>(); }) == ErrorCode::InvalidArgument);
  Json missing = makeSwap();
  missing.erase("tradeDate");
  CHECK(codeOf([&] { missing.get<Trade>(); }) == ErrorCode::InvalidArgument);
}
