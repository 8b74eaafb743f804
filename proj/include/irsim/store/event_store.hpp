// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "irsim/store/backend.hpp"
#include "irsim/store/envelope.hpp"

namespace irsim::store {

using SubscriptionId = std::uint64_t;
using Listener = std::function<void(const EventEnvelope&)>;

/// Authoritative append-only event store with publish-subscribe delivery.
///
/// Appends are atomic: either every event of a call is persisted and
/// sequenced or none is. After persistence each envelope is delivered to
/// every matching subscriber in global sequence order. Delivery is
/// synchronous: an append made from outside any listener returns only after
/// all subscribers have processed its envelopes (and whatever those
/// listeners appended in turn). Appends made from inside a listener are
/// queued behind the envelope being delivered, which keeps every
/// subscriber's view in global order.
class EventStore {
 public:
  explicit EventStore(std::unique_ptr<StorageBackend> backend = makeMemoryBackend());

  EventStore(const EventStore&) = delete;
  EventStore& operator=(const EventStore&) = delete;

  /// Throws Error(ConcurrencyConflict) when `expectedVersion` is present and
  /// differs from the aggregate's current version, and Error(InvalidArgument)
  /// for an empty batch or aggregate id. Nothing is persisted on failure.
  std::vector<EventEnvelope> append(const std::string& aggregateId,
                                    std::optional<std::int64_t> expectedVersion,
                                    std::vector<DomainEvent> events, const DateTime& simulationTime);

  std::vector<EventEnvelope> readStream(const std::string& aggregateId) const;

  std::vector<EventEnvelope> readAll(
      std::int64_t fromGlobalSequence = 1, const SubscriptionFilter& filter = {},
      std::size_t limit = std::numeric_limits<std::size_t>::max()) const;

  /// Highest version of the aggregate, 0 when it has no events.
  std::int64_t currentVersion(const std::string& aggregateId) const;
  std::int64_t lastSequence() const;
  std::size_t size() const;

  SubscriptionId subscribe(SubscriptionFilter filter, Listener listener);
  void unsubscribe(SubscriptionId id);

  /// Erases every envelope; sequences restart at 1 and subscriptions stay.
  void resetStore();

  /// Left fold of `apply` over the aggregate's stream.
  template <typename State, typename Apply>
  State replayAggregate(const std::string& aggregateId, State initial, Apply&& apply) const {
    for (const auto& envelope : readStream(aggregateId)) {
      initial = apply(std::move(initial), envelope);
    }
    return initial;
  }

 private:
  struct Subscription {
    SubscriptionFilter filter;
    Listener listener;
    std::int64_t lastDelivered = 0;
    bool active = true;
  };

  void drain();

  std::unique_ptr<StorageBackend> backend_;

  mutable std::shared_mutex mutex_;
  std::vector<EventEnvelope> log_;
  std::map<std::string, std::vector<std::size_t>> streams_;

  std::mutex deliveryMutex_;
  std::map<SubscriptionId, std::shared_ptr<Subscription>> subscriptions_;
  SubscriptionId nextSubscription_ = 1;
  std::deque<EventEnvelope> pending_;
  bool delivering_ = false;
};

}  // namespace irsim::store
