// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "irsim/cdm/types.hpp"
#include "irsim/events/simulator_events.hpp"
#include "irsim/fmi/aggregates.hpp"
#include "irsim/fmi/commands.hpp"
#include "irsim/store/command_bus.hpp"
#include "irsim/store/event_store.hpp"

namespace irsim::fmi {

/// Looks up a registered party by id.
using PartyLookup = std::function<std::optional<cdm::Party>(const cdm::PartyId&)>;
using TimeSource = std::function<DateTime()>;
using SeedSource = std::function<std::uint64_t()>;

/// The FMI command side: submission and consent services, the swap and
/// payment aggregates, and the lifecycle event initiator.
///
/// Handlers are registered on the command bus at construction; the
/// initiator subscribes to DeadlineBreached on the store. Live aggregates are
/// cached and advanced by applying each append's envelopes, so that
/// replaying a stream from the store must reproduce the cached state.
class FmiService {
 public:
  FmiService(store::EventStore& store, store::CommandBus& bus, PartyLookup parties, TimeSource now,
             SeedSource seed);
  ~FmiService();

  FmiService(const FmiService&) = delete;
  FmiService& operator=(const FmiService&) = delete;

  store::CommandResult submitExecution(const cdm::Trade& trade);
  store::CommandResult consent(const cdm::TradeId& tradeId, ConsentDecision decision);
  store::CommandResult triggerReset(const cdm::TradeId& tradeId, int periodIndex);
  store::CommandResult triggerPayment(const cdm::TradeId& tradeId, lifecycle::LegKind leg, int periodIndex);

  /// Reacts to a breached deadline by dispatching the matching trigger
  /// command. Failures are appended as FailedLifecycleAction.
  void onDeadlineBreached(const events::DeadlineBreached& event);

  std::optional<IrsAggregate> trade(const cdm::TradeId& tradeId) const;
  std::optional<PaymentAggregate> payment(const std::string& transferId) const;
  std::vector<cdm::TradeId> tradeIds() const;

  /// Rebuilds an aggregate from the store alone.
  IrsAggregate replayTrade(const cdm::TradeId& tradeId) const;
  PaymentAggregate replayPayment(const std::string& transferId) const;

  /// True when an Executed or Confirmed trade names the party.
  bool isPartyInUse(const cdm::PartyId& partyId) const;

  /// Drops every cached aggregate.
  void clear();
  /// Re-derives the caches by folding the whole store.
  void rebuild();

 private:
  std::vector<store::EventEnvelope> handleSubmitExecution(const store::CommandEnvelope& command);
  std::vector<store::EventEnvelope> handleConsent(const store::CommandEnvelope& command);
  std::vector<store::EventEnvelope> handleTriggerReset(const store::CommandEnvelope& command);
  std::vector<store::EventEnvelope> handleTriggerPayment(const store::CommandEnvelope& command);
  std::vector<store::EventEnvelope> handleSettlePayment(const store::CommandEnvelope& command);

  const IrsAggregate& requireTrade(const cdm::TradeId& tradeId) const;
  std::vector<store::EventEnvelope> appendToTrade(const cdm::TradeId& tradeId,
                                                  std::vector<store::DomainEvent> events);
  std::vector<store::EventEnvelope> appendToPayment(const std::string& transferId,
                                                    std::vector<store::DomainEvent> events);

  store::EventStore& store_;
  store::CommandBus& bus_;
  PartyLookup parties_;
  TimeSource now_;
  SeedSource seed_;
  store::SubscriptionId initiatorSubscription_ = 0;

  std::map<cdm::TradeId, IrsAggregate> trades_;
  std::map<std::string, PaymentAggregate> payments_;
};

}  // namespace irsim::fmi
