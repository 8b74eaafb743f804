// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "irsim/cdm/types.hpp"
#include "irsim/lifecycle/deadlines.hpp"
#include "irsim/store/envelope.hpp"

namespace irsim::fmi {

enum class OpenAction { ConfirmExecution };

/// One interest rate swap. State changes only by folding the envelopes of
/// its own stream through applyIrsEvent.
struct IrsAggregate {
  cdm::TradeId tradeId;
  std::optional<cdm::TradeState> currentState;
  std::int64_t version = 0;
  std::set<std::string> pendingDeadlineIds;
  std::set<OpenAction> openActions;
  /// Observed rate per floating period.
  std::map<int, Decimal> resetRates;
  std::set<std::pair<lifecycle::LegKind, int>> paidPeriods;
  /// CDM business events in stream order, for lineage checks.
  std::vector<cdm::BusinessEvent> businessEvents;

  bool exists() const { return currentState.has_value(); }
  cdm::TradeStatus status() const;

  friend bool operator==(const IrsAggregate&, const IrsAggregate&) = default;
};

IrsAggregate applyIrsEvent(IrsAggregate aggregate, const store::EventEnvelope& envelope);

/// Simulated settlement of one transfer; terminal state is Settled.
struct PaymentAggregate {
  std::string transferId;
  std::optional<cdm::Transfer> transfer;
  cdm::TradeId tradeId;
  lifecycle::LegKind leg = lifecycle::LegKind::Fixed;
  int periodIndex = 0;
  std::int64_t version = 0;

  bool settled() const {
    return transfer && transfer->status == cdm::TransferStatus::Settled;
  }

  friend bool operator==(const PaymentAggregate&, const PaymentAggregate&) = default;
};

PaymentAggregate applyPaymentEvent(PaymentAggregate aggregate, const store::EventEnvelope& envelope);

}  // namespace irsim::fmi
