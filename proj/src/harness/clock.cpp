// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/harness/clock.hpp"

#include <algorithm>

#include "irsim/events/simulator_events.hpp"

namespace irsim::harness {

using namespace irsim::events;

namespace {
constexpr const char* kClockId = "simulation-clock";
}

SimulationClock::SimulationClock(store::EventStore& store) : store_(store) {
  subscription_ = store_.subscribe(
      store::SubscriptionFilter::types({ClockCreated::kType, ClockAdvanced::kType}),
      [this](const store::EventEnvelope& e) { apply(e); });
}

SimulationClock::~SimulationClock() { store_.unsubscribe(subscription_); }

std::string SimulationClock::createClock(const DateTime& initialTime) {
  if (state_) {
    throw Error(ErrorCode::AlreadyExists, "the simulation already has clock " + state_->clockId);
  }
  const auto envelopes = store_.append(aggregate::kClock, 0,
                                       {toDomainEvent(ClockCreated{kClockId, initialTime})},
                                       initialTime);
  // Normally set by our own subscription during the append.
  if (!state_) apply(envelopes.front());
  return state_->clockId;
}

DateTime SimulationClock::getTime() const {
  if (!state_) throw Error(ErrorCode::NoClock, "no clock has been created for this simulation");
  return state_->currentTime;
}

void SimulationClock::setTime(const DateTime& time) {
  const DateTime now = getTime();
  if (time < now) {
    throw Error(ErrorCode::ClockRegression,
                "cannot move the clock back from " + now.toString() + " to " + time.toString());
  }
  if (time == now) return;
  state_->currentTime = time;
  store_.append(aggregate::kClock, std::nullopt,
                {toDomainEvent(ClockAdvanced{state_->clockId, now, time})}, time);
}

void SimulationClock::apply(const store::EventEnvelope& envelope) {
  if (is<ClockCreated>(envelope)) {
    const auto created = decode<ClockCreated>(envelope);
    state_ = ClockSnapshot{created.clockId, created.time};
  } else if (is<ClockAdvanced>(envelope) && state_) {
    // A delivery queued behind a later setTime must not pull the clock back.
    state_->currentTime = std::max(state_->currentTime, decode<ClockAdvanced>(envelope).to);
  }
}

}  // namespace irsim::harness
