// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "irsim/events/simulator_events.hpp"
#include "irsim/harness/scenario.hpp"
#include "irsim/harness/scheduler.hpp"
#include "support/fixtures.hpp"

using namespace irsim;
using namespace irsim::harness;
using irsim::lifecycle::Deadline;
using irsim::lifecycle::DeadlineKind;
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

DateTime at(int y, unsigned m, unsigned d) { return DateTime(Date(y, m, d)); }

// Store, clock and scheduler without any trade machinery.
struct Bench {
  store::EventStore store;
  SimulationClock clock{store};
  Scheduler scheduler{store, clock};

  Deadline schedule(const std::string& id, DateTime due, DeadlineKind kind = DeadlineKind::Reset,
                    int period = 0) {
    Deadline d{id, "T", due, kind, period, lifecycle::DeadlineStatus::Open};
    store.append(events::aggregate::kScheduler, std::nullopt,
                 {events::toDomainEvent(events::DeadlineScheduled{d})}, clock.getTime());
    return d;
  }
  void cancel(const std::string& id) {
    store.append(events::aggregate::kScheduler, std::nullopt,
                 {events::toDomainEvent(events::DeadlineCancelled{id, "T"})}, clock.getTime());
  }
};

std::vector<std::string> ids(const std::vector<Deadline>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.deadlineId);
  return out;
}

}  // namespace

TEST_CASE("clock lifecycle") {
  Bench b;
  CHECK(!b.clock.exists());
  CHECK(codeOf([&] { b.clock.getTime(); }) == ErrorCode::NoClock);
  CHECK(codeOf([&] { b.clock.setTime(at(2024, 1, 1)); }) == ErrorCode::NoClock);
  CHECK(b.clock.createClock(at(2024, 1, 10)) == "simulation-clock");
  CHECK(codeOf([&] { b.clock.createClock(at(2024, 1, 10)); }) == ErrorCode::AlreadyExists);
  CHECK(b.clock.getTime() == at(2024, 1, 10));

  const auto size = b.store.size();
  b.clock.setTime(at(2024, 1, 10));
  CHECK(b.store.size() == size);  // no-op
  CHECK(codeOf([&] { b.clock.setTime(at(2024, 1, 9)); }) == ErrorCode::ClockRegression);
  b.clock.setTime(at(2024, 2, 1));
  const auto advanced = b.store.readStream(events::aggregate::kClock).back();
  CHECK(advanced.eventType == events::ClockAdvanced::kType);
  const auto payload = events::decode<events::ClockAdvanced>(advanced);
  CHECK(payload.from == at(2024, 1, 10));
  CHECK(payload.to == at(2024, 2, 1));
  CHECK(advanced.simulationTime == at(2024, 2, 1));

  SimulationClock rebuilt(b.store);
  for (const auto& e : b.store.readAll()) rebuilt.apply(e);
  CHECK(rebuilt.snapshot() == b.clock.snapshot());
}

TEST_CASE("advancing breaches due deadlines in order and stops at each") {
  Bench b;
  b.clock.createClock(at(2024, 1, 1));
  b.schedule("c", at(2024, 3, 1), DeadlineKind::FloatingPayment);
  b.schedule("a", at(2024, 2, 1));
  b.schedule("b", at(2024, 3, 1), DeadlineKind::FixedPayment);
  b.schedule("later", at(2024, 9, 1));

  auto report = b.scheduler.advanceTo(at(2024, 1, 1));
  CHECK(report.breachedDeadlines.empty());
  CHECK(report.currentTime == at(2024, 1, 1));

  report = b.scheduler.advanceTo(at(2024, 6, 1));
  CHECK(ids(report.breachedDeadlines) == std::vector<std::string>{"a", "b", "c"});
  CHECK(report.currentTime == at(2024, 6, 1));
  for (const auto& d : report.breachedDeadlines) CHECK(d.status == lifecycle::DeadlineStatus::Triggered);

  // Each breach is stamped with its own due time.
  std::vector<DateTime> stamps;
  for (const auto& e : b.store.readStream(events::aggregate::kScheduler)) {
    if (e.eventType == events::DeadlineBreached::kType) stamps.push_back(e.simulationTime);
  }
  CHECK(stamps == std::vector<DateTime>{at(2024, 2, 1), at(2024, 3, 1), at(2024, 3, 1)});
  CHECK(ids(b.scheduler.openDeadlines()) == std::vector<std::string>{"later"});
  CHECK(codeOf([&] { b.scheduler.advanceTo(at(2024, 5, 1)); }) == ErrorCode::ClockRegression);
}

TEST_CASE("forward and play") {
  Bench b;
  b.clock.createClock(at(2024, 1, 1));
  CHECK(codeOf([&] { b.scheduler.advanceToNextDeadline(); }) == ErrorCode::NothingScheduled);
  CHECK(b.scheduler.play().breachedDeadlines.empty());

  b.schedule("x", at(2024, 4, 1));
  b.schedule("y", at(2024, 7, 1));
  auto step = b.scheduler.advanceToNextDeadline();
  CHECK(ids(step.breachedDeadlines) == std::vector<std::string>{"x"});
  CHECK(b.clock.getTime() == at(2024, 4, 1));

  auto rest = b.scheduler.play();
  CHECK(ids(rest.breachedDeadlines) == std::vector<std::string>{"y"});
  CHECK(rest.currentTime == at(2024, 7, 1));
  const auto size = b.store.size();
  CHECK(b.scheduler.play().breachedDeadlines.empty());
  CHECK(b.store.size() == size);
  CHECK(codeOf([&] { b.scheduler.advanceToNextDeadline(); }) == ErrorCode::NothingScheduled);
}

TEST_CASE("a past-dated deadline is breached as soon as it is scheduled") {
  Bench b;
  b.clock.createClock(at(2024, 6, 1));
  b.schedule("past", at(2024, 1, 1));
  b.schedule("now", at(2024, 6, 1));
  CHECK(ids(b.scheduler.breachLog()) == std::vector<std::string>{"past", "now"});
  CHECK(b.clock.getTime() == at(2024, 6, 1));
  CHECK(b.scheduler.openDeadlines().empty());

  // Deadlines that predate the clock itself fire on ClockCreated.
  Bench early;
  early.store.append(events::aggregate::kScheduler, std::nullopt,
                     {events::toDomainEvent(events::DeadlineScheduled{
                         Deadline{"d", "T", at(2024, 1, 1), DeadlineKind::Reset, 0, {}}})},
                     at(2024, 1, 1));
  CHECK(early.scheduler.breachLog().empty());
  early.clock.createClock(at(2024, 2, 1));
  CHECK(ids(early.scheduler.breachLog()) == std::vector<std::string>{"d"});
}

TEST_CASE("cancelled deadlines never fire") {
  Bench b;
  b.clock.createClock(at(2024, 1, 1));
  b.schedule("keep", at(2024, 2, 1));
  b.schedule("drop", at(2024, 3, 1));
  b.cancel("drop");
  b.cancel("unknown");
  CHECK(b.scheduler.cancelledCount() == 1);
  CHECK(ids(b.scheduler.play().breachedDeadlines) == std::vector<std::string>{"keep"});
  CHECK(!b.scheduler.find("drop"));
}

TEST_CASE("random schedules breach exactly the due deadlines") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Bench b;
    const Date origin(2024, 1, 1);
    b.clock.createClock(DateTime(origin));
    std::uniform_int_distribution<int> offset(0, 400);
    std::uniform_int_distribution<int> kind(0, 2);
    const int n = std::uniform_int_distribution<int>(0, 12)(rng);
    std::vector<Deadline> all;
    std::set<std::string> dropped;
    for (int i = 0; i < n; ++i) {
      const auto due = DateTime(origin.addDays(offset(rng) + 1));
      all.push_back(b.schedule("d" + std::to_string(i), due, static_cast<DeadlineKind>(kind(rng)), i));
      if (rng() % 5 == 0) {
        b.cancel(all.back().deadlineId);
        dropped.insert(all.back().deadlineId);
      }
    }
    const DateTime target(origin.addDays(offset(rng)));
    const auto report = b.scheduler.advanceTo(target);

    std::vector<Deadline> expected;
    for (auto d : all) {
      if (d.dueTime <= target && !dropped.count(d.deadlineId)) {
        d.status = lifecycle::DeadlineStatus::Triggered;
        expected.push_back(d);
      }
    }
    std::sort(expected.begin(), expected.end(), lifecycle::deadlineBefore);
    CHECK(report.breachedDeadlines == expected);
    CHECK(b.clock.getTime() == target);
    // Conservation: every scheduled deadline is open, breached or cancelled.
    CHECK(b.scheduler.openDeadlines().size() + b.scheduler.breachLog().size() +
              b.scheduler.cancelledCount() ==
          all.size());
    for (const auto& d : b.scheduler.openDeadlines()) CHECK(d.dueTime > target);
  }
}

TEST_CASE("reset clears the run and keeps parties") {
  SimFixture f;
  REQUIRE(f.sim.fmi().submitExecution(makeSwap(f.terms())).ok);
  REQUIRE(f.sim.fmi().consent("T-1", fmi::ConsentDecision::Confirm).ok);
  f.sim.scheduler().advanceTo(at(2024, 5, 1));
  const auto parties = f.sim.registry().listParties();

  f.sim.resetSimulation(7);
  CHECK(f.sim.seed() == 7);
  CHECK(f.sim.store().size() == 0);
  CHECK(!f.sim.clock().exists());
  CHECK(codeOf([&] { f.sim.clock().getTime(); }) == ErrorCode::NoClock);
  CHECK(f.sim.scheduler().openDeadlines().empty());
  CHECK(f.sim.scheduler().breachLog().empty());
  CHECK(f.sim.projector().queryBlotter().empty());
  CHECK(f.sim.registry().listParties() == parties);

  // The same trade id is free again.
  f.sim.clock().createClock(at(2024, 1, 10));
  CHECK(f.sim.fmi().submitExecution(makeSwap(f.terms())).ok);
}

TEST_CASE("reference scenario") {
  Simulator sim;
  const auto result = runReferenceScenario(sim);
  CHECK(result.tradeId == "IRS-1");
  CHECK(sim.projector().queryTrade("IRS-1").status == cdm::TradeStatus::Matured);
  CHECK(result.report.breachedDeadlines.size() == 12);
  CHECK(result.report.currentTime == DateTime(Date(2025, 1, 15)));

  // Running it again in the same simulator reuses the parties.
  const auto parties = sim.registry().listParties().size();
  const auto again = runReferenceScenario(sim);
  CHECK(sim.registry().listParties().size() == parties);
  CHECK(again.party1 == result.party1);
}
