// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/harness/scheduler.hpp"

#include <algorithm>

#include "irsim/events/simulator_events.hpp"

namespace irsim::harness {

using namespace irsim::events;
using lifecycle::Deadline;
using lifecycle::DeadlineStatus;

Scheduler::Scheduler(store::EventStore& store, SimulationClock& clock)
    : store_(store), clock_(clock) {
  subscription_ = store_.subscribe(
      store::SubscriptionFilter::types({DeadlineScheduled::kType, DeadlineCancelled::kType,
                                        DeadlineBreached::kType, ClockCreated::kType}),
      [this](const store::EventEnvelope& e) { onEnvelope(e); });
}

Scheduler::~Scheduler() { store_.unsubscribe(subscription_); }

void Scheduler::apply(const store::EventEnvelope& e) {
  if (is<DeadlineScheduled>(e)) {
    auto d = decode<DeadlineScheduled>(e).deadline;
    d.status = DeadlineStatus::Open;
    deadlines_[d.deadlineId] = d;
  } else if (is<DeadlineCancelled>(e)) {
    const auto id = decode<DeadlineCancelled>(e).deadlineId;
    if (const auto it = deadlines_.find(id);
        it != deadlines_.end() && it->second.status == DeadlineStatus::Open) {
      deadlines_.erase(it);
      cancelled_.insert(id);
    }
  } else if (is<DeadlineBreached>(e)) {
    auto d = decode<DeadlineBreached>(e).deadline;
    inFlight_.erase(d.deadlineId);
    d.status = DeadlineStatus::Triggered;
    deadlines_[d.deadlineId] = d;
    breachLog_.push_back(d);
  }
}

void Scheduler::onEnvelope(const store::EventEnvelope& e) {
  apply(e);
  if (is<DeadlineScheduled>(e) || is<ClockCreated>(e)) breachOverdue();
}

void Scheduler::breachOverdue() {
  if (!clock_.exists()) return;
  const DateTime now = clock_.getTime();
  while (const auto next = earliestOpen()) {
    if (next->dueTime > now) break;
    publishBreach(*next);
  }
}

void Scheduler::publishBreach(Deadline deadline) {
  inFlight_.insert(deadline.deadlineId);
  deadline.status = DeadlineStatus::Triggered;
  store_.append(aggregate::kScheduler, std::nullopt, {toDomainEvent(DeadlineBreached{deadline})},
                clock_.getTime());
}

std::optional<Deadline> Scheduler::earliestOpen() const {
  std::optional<Deadline> best;
  for (const auto& [id, d] : deadlines_) {
    if (d.status != DeadlineStatus::Open || inFlight_.count(id)) continue;
    if (!best || lifecycle::deadlineBefore(d, *best)) best = d;
  }
  return best;
}

TriggerReport Scheduler::advanceTo(const DateTime& time) {
  const DateTime start = clock_.getTime();
  if (time < start) {
    throw Error(ErrorCode::ClockRegression,
                "cannot move the clock back from " + start.toString() + " to " + time.toString());
  }
  const std::size_t logStart = breachLog_.size();
  while (const auto next = earliestOpen()) {
    if (next->dueTime > time) break;
    if (next->dueTime > clock_.getTime()) clock_.setTime(next->dueTime);
    publishBreach(*next);
  }
  clock_.setTime(time);
  return TriggerReport{{breachLog_.begin() + static_cast<std::ptrdiff_t>(logStart), breachLog_.end()},
                       clock_.getTime()};
}

TriggerReport Scheduler::advanceToNextDeadline() {
  const auto next = earliestOpen();
  if (!next) throw Error(ErrorCode::NothingScheduled, "there are no open deadlines");
  return advanceTo(std::max(next->dueTime, clock_.getTime()));
}

TriggerReport Scheduler::play() {
  TriggerReport report{{}, clock_.getTime()};
  while (earliestOpen()) {
    auto step = advanceToNextDeadline();
    report.breachedDeadlines.insert(report.breachedDeadlines.end(), step.breachedDeadlines.begin(),
                                    step.breachedDeadlines.end());
    report.currentTime = step.currentTime;
  }
  return report;
}

std::vector<Deadline> Scheduler::openDeadlines() const {
  std::vector<Deadline> out;
  for (const auto& [id, d] : deadlines_) {
    if (d.status == DeadlineStatus::Open) out.push_back(d);
  }
  std::sort(out.begin(), out.end(), lifecycle::deadlineBefore);
  return out;
}

std::optional<Deadline> Scheduler::nextDeadline() const { return earliestOpen(); }

std::optional<Deadline> Scheduler::find(const std::string& deadlineId) const {
  const auto it = deadlines_.find(deadlineId);
  if (it == deadlines_.end()) return std::nullopt;
  return it->second;
}

void Scheduler::clear() {
  deadlines_.clear();
  cancelled_.clear();
  inFlight_.clear();
  breachLog_.clear();
}

}  // namespace irsim::harness
