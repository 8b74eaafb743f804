// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "irsim/query/views.hpp"
#include "irsim/store/event_store.hpp"

namespace irsim::query {

/// Query side of the FMI. Folds every envelope into the blotter, event
/// stream and next-deadline views. It never writes to the store, so the
/// views can always be rebuilt by replaying readAll from empty.
class Projector {
 public:
  /// Subscribes to every envelope appended from now on.
  explicit Projector(store::EventStore& store);
  ~Projector();

  Projector(const Projector&) = delete;
  Projector& operator=(const Projector&) = delete;

  /// Idempotent: an envelope whose sequence was already projected is
  /// ignored, as are event types the projector does not know.
  void projectEvent(const store::EventEnvelope& envelope);

  std::vector<BlotterRow> queryBlotter() const;
  /// Throws Error(NotFound).
  BlotterRow queryTrade(const cdm::TradeId& tradeId) const;
  /// Newest first. Throws Error(InvalidArgument) for limit < 1.
  std::vector<EventStreamRow> queryEventStream(std::size_t limit = 25, bool cdmOnly = false) const;
  NextDeadlineView queryNextDeadline() const;

  std::int64_t lastProjectedSequence() const;

  void clear();
  /// clear() then fold the whole store.
  void rebuild();

 private:
  void project(const store::EventEnvelope& envelope);
  BlotterRow* row(const cdm::TradeId& tradeId);

  store::EventStore& store_;
  store::SubscriptionId subscription_ = 0;

  mutable std::shared_mutex mutex_;
  std::int64_t lastSequence_ = 0;
  std::map<cdm::TradeId, BlotterRow> blotter_;
  /// Trade ids in execution order; the blotter lists rows this way.
  std::vector<cdm::TradeId> order_;
  std::vector<EventStreamRow> stream_;
  std::map<std::string, lifecycle::Deadline> openDeadlines_;
  /// Economic terms per trade, needed to price projected floating flows.
  std::map<cdm::TradeId, cdm::Trade> trades_;
};

}  // namespace irsim::query
