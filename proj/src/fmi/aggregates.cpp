// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/fmi/aggregates.hpp"

#include "irsim/events/simulator_events.hpp"

namespace irsim::fmi {

using namespace irsim::events;

cdm::TradeStatus IrsAggregate::status() const {
  if (!currentState) throw Error(ErrorCode::NotFound, "trade " + tradeId + " does not exist");
  return currentState->status;
}

IrsAggregate applyIrsEvent(IrsAggregate a, const store::EventEnvelope& e) {
  a.version = e.aggregateVersion;
  if (is<ExecutionOccurred>(e)) {
    auto event = decode<ExecutionOccurred>(e).businessEvent;
    a.currentState = event.primitives.back().after;
    a.tradeId = a.currentState->trade.tradeId;
    a.openActions = {OpenAction::ConfirmExecution};
    a.businessEvents.push_back(std::move(event));
  } else if (is<TradeConfirmed>(e)) {
    auto event = decode<TradeConfirmed>(e).businessEvent;
    a.currentState = event.primitives.back().after;
    a.openActions.clear();
    a.businessEvents.push_back(std::move(event));
  } else if (is<TradeRejected>(e)) {
    a.currentState->status = cdm::TradeStatus::Rejected;
    a.openActions.clear();
  } else if (is<DeadlineScheduled>(e)) {
    a.pendingDeadlineIds.insert(decode<DeadlineScheduled>(e).deadline.deadlineId);
  } else if (is<DeadlineCancelled>(e)) {
    a.pendingDeadlineIds.erase(decode<DeadlineCancelled>(e).deadlineId);
  } else if (is<RateReset>(e)) {
    auto reset = decode<RateReset>(e);
    a.currentState = reset.businessEvent.primitives.back().after;
    a.resetRates[reset.periodIndex] = a.currentState->resetHistory.back().observedRate;
    a.pendingDeadlineIds.erase(
        lifecycle::makeDeadlineId(a.tradeId, lifecycle::DeadlineKind::Reset, reset.periodIndex));
    a.businessEvents.push_back(std::move(reset.businessEvent));
  } else if (is<CashTransferred>(e)) {
    auto transfer = decode<CashTransferred>(e);
    a.currentState = transfer.businessEvent.primitives.back().after;
    a.paidPeriods.emplace(transfer.leg, transfer.periodIndex);
    const auto kind = transfer.leg == lifecycle::LegKind::Fixed
                          ? lifecycle::DeadlineKind::FixedPayment
                          : lifecycle::DeadlineKind::FloatingPayment;
    a.pendingDeadlineIds.erase(lifecycle::makeDeadlineId(a.tradeId, kind, transfer.periodIndex));
    a.businessEvents.push_back(std::move(transfer.businessEvent));
  } else if (is<TradeMatured>(e)) {
    a.currentState->status = cdm::TradeStatus::Matured;
  }
  return a;
}

PaymentAggregate applyPaymentEvent(PaymentAggregate a, const store::EventEnvelope& e) {
  a.version = e.aggregateVersion;
  if (is<PaymentInstructed>(e)) {
    auto instructed = decode<PaymentInstructed>(e);
    a.transferId = instructed.transfer.transferId;
    a.transfer = std::move(instructed.transfer);
    a.tradeId = std::move(instructed.tradeId);
    a.leg = instructed.leg;
    a.periodIndex = instructed.periodIndex;
  } else if (is<PaymentSettled>(e)) {
    a.transfer->status = cdm::TransferStatus::Settled;
  }
  return a;
}

}  // namespace irsim::fmi
