// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "irsim/harness/clock.hpp"
#include "irsim/lifecycle/deadlines.hpp"
#include "irsim/store/event_store.hpp"

namespace irsim::harness {

struct TriggerReport {
  std::vector<lifecycle::Deadline> breachedDeadlines;
  DateTime currentTime;
};

/// Deadline scheduler. Its deadline set is a projection of
/// DeadlineScheduled, DeadlineCancelled and DeadlineBreached events; it
/// publishes DeadlineBreached whenever the clock reaches a deadline's due
/// time, including immediately for deadlines scheduled on or before the
/// current time.
class Scheduler {
 public:
  Scheduler(store::EventStore& store, SimulationClock& clock);
  ~Scheduler();

  Scheduler(const Scheduler&) = delete;
  Scheduler& operator=(const Scheduler&) = delete;

  /// Walks the clock forward, breaching every Open deadline with
  /// dueTime <= time in deadline order. The clock stops at each breached
  /// deadline's due time on the way, then settles on `time`. Deadlines
  /// scheduled while breaches are being handled are picked up by the same
  /// call. Throws Error(ClockRegression) for time < now.
  TriggerReport advanceTo(const DateTime& time);

  /// Throws Error(NothingScheduled) when no deadline is Open.
  TriggerReport advanceToNextDeadline();

  /// Repeats advanceToNextDeadline until nothing is Open.
  TriggerReport play();

  /// Open deadlines in deadline order.
  std::vector<lifecycle::Deadline> openDeadlines() const;
  std::optional<lifecycle::Deadline> nextDeadline() const;
  std::optional<lifecycle::Deadline> find(const std::string& deadlineId) const;
  /// Every breach of the run, in publication order.
  const std::vector<lifecycle::Deadline>& breachLog() const { return breachLog_; }
  std::size_t cancelledCount() const { return cancelled_.size(); }

  /// Folds an event into the projection without reacting to it.
  void apply(const store::EventEnvelope& envelope);
  void clear();

 private:
  void onEnvelope(const store::EventEnvelope& envelope);
  void breachOverdue();
  void publishBreach(lifecycle::Deadline deadline);
  std::optional<lifecycle::Deadline> earliestOpen() const;

  store::EventStore& store_;
  SimulationClock& clock_;
  store::SubscriptionId subscription_ = 0;

  std::map<std::string, lifecycle::Deadline> deadlines_;
  std::set<std::string> cancelled_;
  /// Breaches published but not yet delivered back to us.
  std::set<std::string> inFlight_;
  std::vector<lifecycle::Deadline> breachLog_;
};

}  // namespace irsim::harness
