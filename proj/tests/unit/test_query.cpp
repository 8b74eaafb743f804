// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "irsim/events/simulator_events.hpp"
#include "irsim/query/projector.hpp"
#include "support/fixtures.hpp"

using namespace irsim;
using namespace irsim::query;
using irsim::fmi::ConsentDecision;
using irsim::testing::makeSwap;
using irsim::testing::SimFixture;

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

struct Snapshot {
  std::vector<BlotterRow> blotter;
  std::vector<EventStreamRow> stream;
  NextDeadlineView next;
  bool operator==(const Snapshot&) const = default;
};

Snapshot snapshot(const Projector& p) {
  return {p.queryBlotter(), p.queryEventStream(100000), p.queryNextDeadline()};
}

}  // namespace

TEST_CASE("blotter rows follow the trade") {
  SimFixture f;
  auto& q = f.sim.projector();
  CHECK(q.queryBlotter().empty());
  CHECK(codeOf([&] { q.queryTrade("T-1"); }) == ErrorCode::NotFound);

  REQUIRE(f.sim.fmi().submitExecution(makeSwap(f.terms())).ok);
  REQUIRE(q.queryBlotter().size() == 1);
  auto row = q.queryTrade("T-1");
  CHECK(row.status == cdm::TradeStatus::Executed);
  CHECK(row.openActions == std::vector<std::string>{kConfirmExecutionAction});
  CHECK(row.counterpartyNames == std::array<std::string, 2>{"Bank A", "Bank B"});
  CHECK(row.productType == cdm::ProductQualification::InterestRateSwapFixedFloat);
  CHECK(row.notional == Decimal::fromInt(10'000'000));
  CHECK(row.fixedRate == Decimal::parse("0.02"));
  CHECK(row.floatingIndex == std::optional<std::string>{"SIM-IBOR"});
  CHECK(row.floatingTenorMonths == std::optional<int>{3});
  CHECK(row.effectiveDate == Date(2024, 1, 15));
  CHECK(row.cashflows.empty());
  REQUIRE(row.projectedCashflows.size() == 8);
  for (const auto& flow : row.projectedCashflows) {
    CHECK(flow.amount.has_value() == (flow.leg == LegKind::Fixed));
    CHECK(flow.direction == (flow.leg == LegKind::Fixed ? CashflowDirection::Pay : CashflowDirection::Receive));
    CHECK(!flow.settled);
  }
  CHECK(row.projectedCashflows[0].amount == Decimal::parse("50555.56"));
  CHECK(!q.queryNextDeadline().deadline);

  REQUIRE(f.sim.fmi().consent("T-1", ConsentDecision::Confirm).ok);
  row = q.queryTrade("T-1");
  CHECK(row.status == cdm::TradeStatus::Confirmed);
  CHECK(row.openActions.empty());
  auto next = q.queryNextDeadline().deadline;
  REQUIRE(next);
  CHECK(next->name == "Reset period 0 (Floating)");
  CHECK(next->dueTime == DateTime(Date(2024, 1, 15)));

  f.sim.scheduler().advanceToNextDeadline();
  next = q.queryNextDeadline().deadline;
  REQUIRE(next);
  CHECK(next->name == "Reset period 1 (Floating)");
  CHECK(next->dueTime == DateTime(Date(2024, 4, 15)));
  // The first floating flow is now priced.
  CHECK(q.queryTrade("T-1").projectedCashflows[1].leg == LegKind::Floating);
  CHECK(q.queryTrade("T-1").projectedCashflows[1].amount.has_value());
}

TEST_CASE("blotter after a full run") {
  SimFixture f;
  REQUIRE(f.sim.fmi().submitExecution(makeSwap(f.terms())).ok);
  REQUIRE(f.sim.fmi().consent("T-1", ConsentDecision::Confirm).ok);
  f.sim.scheduler().play();
  const auto row = f.sim.projector().queryTrade("T-1");
  CHECK(row.status == cdm::TradeStatus::Matured);
  const auto cdmTransfers =
      f.sim.store().readAll(1, store::SubscriptionFilter::types({events::CashTransferred::kType}));
  REQUIRE(row.cashflows.size() == cdmTransfers.size());
  REQUIRE(row.cashflows.size() == 8);
  for (const auto& c : row.cashflows) CHECK(c.settled);
  for (const auto& p : row.projectedCashflows) {
    CHECK(p.settled);
    bool matched = false;
    for (const auto& c : row.cashflows) {
      if (c.leg == p.leg && c.periodIndex == p.periodIndex) {
        matched = true;
        CHECK(p.amount == c.amount);
        CHECK(p.direction == c.direction);
        CHECK(p.date == c.date);
      }
    }
    CHECK(matched);
  }
  CHECK(!f.sim.projector().queryNextDeadline().deadline);
}

TEST_CASE("event stream window") {
  SimFixture f;
  auto& q = f.sim.projector();
  REQUIRE(f.sim.fmi().submitExecution(makeSwap(f.terms())).ok);
  REQUIRE(f.sim.fmi().consent("T-1", ConsentDecision::Confirm).ok);
  f.sim.scheduler().play();
  const auto total = static_cast<std::int64_t>(f.sim.store().size());
  REQUIRE(total > 30);

  const auto window = q.queryEventStream();
  REQUIRE(window.size() == 25);
  CHECK(window.front().globalSequence == total);
  CHECK(window.back().globalSequence == total - 24);
  for (std::size_t i = 0; i + 1 < window.size(); ++i) {
    CHECK(window[i].globalSequence > window[i + 1].globalSequence);
  }
  const auto all = q.queryEventStream(1000);
  CHECK(all.size() == static_cast<std::size_t>(total));
  const auto cdmRows = q.queryEventStream(1000, true);
  CHECK(cdmRows.size() == 1 + 1 + 4 + 8);
  for (const auto& r : cdmRows) CHECK(r.cdmEventType.has_value());
  CHECK(codeOf([&] { q.queryEventStream(0); }) == ErrorCode::InvalidArgument);

  f.sim.resetSimulation();
  CHECK(q.queryEventStream().empty());
  CHECK(q.queryBlotter().empty());
}

TEST_CASE("projection is idempotent and ignores unknown events") {
  SimFixture f;
  REQUIRE(f.sim.fmi().submitExecution(makeSwap(f.terms())).ok);
  auto& q = f.sim.projector();
  const auto before = snapshot(q);
  for (const auto& e : f.sim.store().readAll()) q.projectEvent(e);
  CHECK(snapshot(q) == before);

  f.sim.store().append("elsewhere", std::nullopt, {store::DomainEvent{"FromTheFuture", Json::object(), false}},
                       DateTime(Date(2024, 1, 10)));
  CHECK(q.queryBlotter() == before.blotter);
  CHECK(q.queryEventStream(1).front().simulatorEventName == "FromTheFuture");
}

TEST_CASE("rebuilt views equal live views") {
  SimFixture f;
  REQUIRE(f.sim.fmi().submitExecution(makeSwap(f.terms())).ok);
  REQUIRE(f.sim.fmi().submitExecution(makeSwap(f.terms("T-2"))).ok);
  REQUIRE(f.sim.fmi().consent("T-1", ConsentDecision::Confirm).ok);
  REQUIRE(f.sim.fmi().consent("T-2", ConsentDecision::Reject).ok);
  f.sim.scheduler().advanceTo(DateTime(Date(2024, 8, 1)));
  const auto live = snapshot(f.sim.projector());

  Projector fresh(f.sim.store());
  fresh.rebuild();
  CHECK(snapshot(fresh) == live);
  f.sim.projector().rebuild();
  CHECK(snapshot(f.sim.projector()) == live);
}

TEST_CASE("view JSON round trips byte for byte") {
  SimFixture f;
  REQUIRE(f.sim.fmi().submitExecution(makeSwap(f.terms())).ok);
  REQUIRE(f.sim.fmi().consent("T-1", ConsentDecision::Confirm).ok);
  f.sim.scheduler().advanceTo(DateTime(Date(2024, 5, 1)));
  auto& q = f.sim.projector();

  const std::string row = Json(q.queryTrade("T-1")).dump();
  CHECK(Json(Json::parse(row).get<BlotterRow>()).dump() == row);
  CHECK(Json::parse(row).get<BlotterRow>() == q.queryTrade("T-1"));
  const std::string stream = Json(q.queryEventStream()).dump();
  CHECK(Json(Json::parse(stream).get<std::vector<EventStreamRow>>()).dump() == stream);
  const std::string next = Json(q.queryNextDeadline()).dump();
  CHECK(Json(Json::parse(next).get<NextDeadlineView>()).dump() == next);
  CHECK(Json(NextDeadlineView{}).dump() == "{}");
}
