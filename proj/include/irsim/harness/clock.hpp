// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "irsim/common/date.hpp"
#include "irsim/store/event_store.hpp"

namespace irsim::harness {

struct ClockSnapshot {
  std::string clockId;
  DateTime currentTime;

  friend bool operator==(const ClockSnapshot&, const ClockSnapshot&) = default;
};

/// The virtual network clock. One clock per simulation run; its time never
/// moves backwards. Every change is published as a ClockCreated or
/// ClockAdvanced event on the "clock" stream.
class SimulationClock {
 public:
  /// Subscribes to clock events so that later subscribers (the scheduler)
  /// already see the new time when they are delivered the same envelope.
  explicit SimulationClock(store::EventStore& store);
  ~SimulationClock();
  SimulationClock(const SimulationClock&) = delete;
  SimulationClock& operator=(const SimulationClock&) = delete;

  /// Throws Error(AlreadyExists) if the run already has a clock.
  std::string createClock(const DateTime& initialTime);

  /// Throws Error(NoClock) before createClock.
  DateTime getTime() const;
  std::optional<ClockSnapshot> snapshot() const { return state_; }
  bool exists() const { return state_.has_value(); }

  /// Moves the clock forward to `time`; a no-op when already there.
  /// Throws Error(ClockRegression) for an earlier time, Error(NoClock)
  /// without a clock.
  void setTime(const DateTime& time);

  /// Folds a clock event into the state (used when rebuilding).
  void apply(const store::EventEnvelope& envelope);
  void clear() { state_.reset(); }

 private:
  store::EventStore& store_;
  std::optional<ClockSnapshot> state_;
  store::SubscriptionId subscription_ = 0;
};

}  // namespace irsim::harness
