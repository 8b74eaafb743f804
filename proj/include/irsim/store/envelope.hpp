// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "irsim/cdm/json.hpp"
#include "irsim/common/date.hpp"

namespace irsim::store {

/// A serialized domain event waiting to be appended.
struct DomainEvent {
  std::string eventType;
  Json payload;
  /// True when the payload wraps a CDM BusinessEvent.
  bool isCdmEvent = false;
};

/// A persisted, globally sequenced record in the event store.
struct EventEnvelope {
  std::int64_t globalSequence = 0;
  std::string aggregateId;
  std::int64_t aggregateVersion = 0;
  std::string eventType;
  DateTime simulationTime;
  Json payload;
  bool isCdmEvent = false;

  friend bool operator==(const EventEnvelope&, const EventEnvelope&) = default;
};

void to_json(Json& j, const EventEnvelope& e);
void from_json(const Json& j, EventEnvelope& e);

struct SubscriptionFilter {
  /// Absent means every event type.
  std::optional<std::set<std::string>> eventTypes;
  bool cdmOnly = false;

  bool matches(const EventEnvelope& e) const {
    if (cdmOnly && !e.isCdmEvent) return false;
    return !eventTypes || eventTypes->count(e.eventType) > 0;
  }

  static SubscriptionFilter all() { return {}; }
  static SubscriptionFilter cdm() { return {std::nullopt, true}; }
  static SubscriptionFilter types(std::set<std::string> names) { return {std::move(names), false}; }
};

struct CommandEnvelope {
  std::string commandId;
  std::string targetAggregateId;
  std::string commandType;
  Json payload;
  std::optional<std::int64_t> expectedVersion;
};

}  // namespace irsim::store
