// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/store/event_store.hpp"

#include "irsim/common/error.hpp"

namespace irsim::store {

EventStore::EventStore(std::unique_ptr<StorageBackend> backend) : backend_(std::move(backend)) {
  for (auto& envelope : backend_->load()) {
    const auto expected = static_cast<std::int64_t>(log_.size()) + 1;
    auto& stream = streams_[envelope.aggregateId];
    if (envelope.globalSequence != expected ||
        envelope.aggregateVersion != static_cast<std::int64_t>(stream.size()) + 1) {
      throw Error(ErrorCode::StorageFailure, "stored log is not contiguous at sequence " +
                                                 std::to_string(envelope.globalSequence));
    }
    stream.push_back(log_.size());
    log_.push_back(std::move(envelope));
  }
}

std::vector<EventEnvelope> EventStore::append(const std::string& aggregateId,
                                              std::optional<std::int64_t> expectedVersion,
                                              std::vector<DomainEvent> events,
                                              const DateTime& simulationTime) {
  if (aggregateId.empty()) throw Error(ErrorCode::InvalidArgument, "aggregate id must be set");
  if (events.empty()) throw Error(ErrorCode::InvalidArgument, "append needs at least one event");

  std::vector<EventEnvelope> batch;
  {
    std::unique_lock lock(mutex_);
    const auto it = streams_.find(aggregateId);
    const auto version = it == streams_.end() ? 0 : static_cast<std::int64_t>(it->second.size());
    if (expectedVersion && *expectedVersion != version) {
      throw Error(ErrorCode::ConcurrencyConflict,
                  "aggregate " + aggregateId + " is at version " + std::to_string(version) +
                      ", expected " + std::to_string(*expectedVersion));
    }
    batch.reserve(events.size());
    auto sequence = static_cast<std::int64_t>(log_.size());
    auto v = version;
    for (auto& event : events) {
      batch.push_back(EventEnvelope{++sequence, aggregateId, ++v, std::move(event.eventType),
                                    simulationTime, std::move(event.payload), event.isCdmEvent});
    }
    backend_->write(batch);  // throws before any in-memory state changes
    auto& stream = streams_[aggregateId];
    for (const auto& envelope : batch) {
      stream.push_back(log_.size());
      log_.push_back(envelope);
    }
  }
  {
    std::lock_guard lock(deliveryMutex_);
    pending_.insert(pending_.end(), batch.begin(), batch.end());
  }
  drain();
  return batch;
}

void EventStore::drain() {
  {
    std::lock_guard lock(deliveryMutex_);
    if (delivering_) return;
    delivering_ = true;
  }
  struct Reset {
    EventStore& self;
    ~Reset() {
      std::lock_guard lock(self.deliveryMutex_);
      self.delivering_ = false;
    }
  } reset{*this};

  for (;;) {
    EventEnvelope envelope;
    std::vector<std::shared_ptr<Subscription>> targets;
    {
      std::lock_guard lock(deliveryMutex_);
      if (pending_.empty()) return;
      envelope = std::move(pending_.front());
      pending_.pop_front();
      for (const auto& [id, sub] : subscriptions_) targets.push_back(sub);
    }
    for (const auto& sub : targets) {
      {
        std::lock_guard lock(deliveryMutex_);
        // Skip listeners removed mid-delivery and anything already seen.
        if (!sub->active) continue;
        if (envelope.globalSequence <= sub->lastDelivered) continue;
        if (!sub->filter.matches(envelope)) continue;
        sub->lastDelivered = envelope.globalSequence;
      }
      sub->listener(envelope);
    }
  }
}

std::vector<EventEnvelope> EventStore::readStream(const std::string& aggregateId) const {
  std::shared_lock lock(mutex_);
  std::vector<EventEnvelope> out;
  const auto it = streams_.find(aggregateId);
  if (it == streams_.end()) return out;
  out.reserve(it->second.size());
  for (const auto index : it->second) out.push_back(log_[index]);
  return out;
}

std::vector<EventEnvelope> EventStore::readAll(std::int64_t fromGlobalSequence,
                                               const SubscriptionFilter& filter,
                                               std::size_t limit) const {
  if (fromGlobalSequence < 1 || limit < 1) {
    throw Error(ErrorCode::InvalidArgument, "readAll needs fromGlobalSequence >= 1 and limit >= 1");
  }
  std::shared_lock lock(mutex_);
  std::vector<EventEnvelope> out;
  for (auto i = static_cast<std::size_t>(fromGlobalSequence - 1); i < log_.size() && out.size() < limit;
       ++i) {
    if (filter.matches(log_[i])) out.push_back(log_[i]);
  }
  return out;
}

std::int64_t EventStore::currentVersion(const std::string& aggregateId) const {
  std::shared_lock lock(mutex_);
  const auto it = streams_.find(aggregateId);
  return it == streams_.end() ? 0 : static_cast<std::int64_t>(it->second.size());
}

std::int64_t EventStore::lastSequence() const {
  std::shared_lock lock(mutex_);
  return static_cast<std::int64_t>(log_.size());
}

std::size_t EventStore::size() const {
  std::shared_lock lock(mutex_);
  return log_.size();
}

SubscriptionId EventStore::subscribe(SubscriptionFilter filter, Listener listener) {
  std::lock_guard lock(deliveryMutex_);
  const SubscriptionId id = nextSubscription_++;
  auto sub = std::make_shared<Subscription>();
  sub->filter = std::move(filter);
  sub->listener = std::move(listener);
  // Only envelopes appended after subscription are delivered.
  sub->lastDelivered = lastSequence();
  subscriptions_.emplace(id, std::move(sub));
  return id;
}

void EventStore::unsubscribe(SubscriptionId id) {
  std::lock_guard lock(deliveryMutex_);
  const auto it = subscriptions_.find(id);
  if (it == subscriptions_.end()) return;
  it->second->active = false;
  subscriptions_.erase(it);
}

void EventStore::resetStore() {
  {
    std::unique_lock lock(mutex_);
    backend_->clear();
    log_.clear();
    streams_.clear();
  }
  std::lock_guard lock(deliveryMutex_);
  pending_.clear();
  for (auto& [id, sub] : subscriptions_) sub->lastDelivered = 0;
}

}  // namespace irsim::store
