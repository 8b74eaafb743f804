// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/lifecycle/events.hpp"

#include <algorithm>

#include "irsim/cdm/qualification.hpp"
#include "irsim/cdm/validation.hpp"
#include "irsim/common/error.hpp"

namespace irsim::lifecycle {
namespace {

using cdm::BusinessEvent;
using cdm::PrimitiveEvent;
using cdm::PrimitiveKind;
using cdm::TradeState;
using cdm::TradeStatus;

BusinessEvent wrap(std::string eventId, const DateTime& eventTime, PrimitiveEvent primitive) {
  BusinessEvent event;
  event.eventId = std::move(eventId);
  event.eventDate = eventTime;
  event.primitives.push_back(std::move(primitive));
  event.qualifiedType = cdm::qualifyBusinessEvent(event.primitives, event.intent);
  return event;
}

void requireStatus(const TradeState& state, TradeStatus expected, const char* action) {
  if (state.status != expected) {
    throw Error(ErrorCode::InvalidTransition,
                std::string(action) + " requires trade " + state.trade.tradeId + " to be " +
                    (expected == TradeStatus::Executed ? "executed" : "confirmed"));
  }
}

bool isCounterparty(const cdm::Trade& trade, const cdm::PartyId& party) {
  const auto& cps = trade.tradableProduct.counterparties;
  return std::any_of(cps.begin(), cps.end(),
                     [&](const cdm::Counterparty& c) { return c.partyRef == party; });
}

}  // namespace

BusinessEvent createExecutionEvent(const cdm::Trade& trade, const DateTime& eventTime) {
  const auto report = cdm::validateTrade(trade);
  if (!report.ok()) throw Error(ErrorCode::InvalidTrade, report.summary());
  PrimitiveEvent primitive;
  primitive.kind = PrimitiveKind::Execution;
  primitive.after = TradeState{trade, TradeStatus::Executed, {}, {}};
  return wrap(trade.tradeId + "/EXECUTION", eventTime, std::move(primitive));
}

BusinessEvent createContractFormationEvent(const TradeState& current, const DateTime& eventTime) {
  requireStatus(current, TradeStatus::Executed, "contract formation");
  PrimitiveEvent primitive;
  primitive.kind = PrimitiveKind::ContractFormation;
  primitive.before = current;
  primitive.after = current;
  primitive.after.status = TradeStatus::Confirmed;
  return wrap(current.trade.tradeId + "/CONTRACT_FORMATION", eventTime, std::move(primitive));
}

BusinessEvent createResetEvent(const TradeState& current, const Observation& observation,
                               const DateTime& eventTime) {
  requireStatus(current, TradeStatus::Confirmed, "reset");
  const auto* leg = cdm::floatingLeg(current.trade.tradableProduct.product);
  if (leg == nullptr) {
    throw Error(ErrorCode::InvalidTransition, "trade " + current.trade.tradeId + " has no floating leg");
  }
  const auto& floating = std::get<cdm::FloatingRate>(leg->rate);
  if (floating.index != observation.index || floating.tenorMonths != observation.tenorMonths) {
    throw Error(ErrorCode::InvalidTransition,
                "observation " + observation.index + " " + std::to_string(observation.tenorMonths) +
                    "M does not match the floating leg " + floating.index + " " +
                    std::to_string(floating.tenorMonths) + "M");
  }
  if (!current.resetHistory.empty() &&
      observation.observationDate < current.resetHistory.back().observationDate) {
    throw Error(ErrorCode::InvalidTransition, "reset observation predates the latest reset");
  }
  PrimitiveEvent primitive;
  primitive.kind = PrimitiveKind::Reset;
  primitive.before = current;
  primitive.after = current;
  primitive.after.resetHistory.push_back(cdm::ResetRecord{
      observation.observationDate, observation.index, observation.tenorMonths, observation.rate});
  return wrap(current.trade.tradeId + "/RESET/" + std::to_string(current.resetHistory.size()),
              eventTime, std::move(primitive));
}

BusinessEvent createCashTransferEvent(const TradeState& current, const cdm::Transfer& transfer,
                                      const DateTime& eventTime) {
  requireStatus(current, TradeStatus::Confirmed, "cash transfer");
  if (!isCounterparty(current.trade, transfer.payerPartyRef) ||
      !isCounterparty(current.trade, transfer.receiverPartyRef) ||
      transfer.payerPartyRef == transfer.receiverPartyRef) {
    throw Error(ErrorCode::InvalidTransition,
                "transfer " + transfer.transferId + " is not between the trade's counterparties");
  }
  if (transfer.amount.isNegative()) {
    throw Error(ErrorCode::InvalidTransition, "transfer amount must not be negative");
  }
  if (!current.transferHistory.empty() &&
      transfer.settlementDate < current.transferHistory.back().settlementDate) {
    throw Error(ErrorCode::InvalidTransition, "transfer settles before the latest transfer");
  }
  PrimitiveEvent primitive;
  primitive.kind = PrimitiveKind::Transfer;
  primitive.before = current;
  primitive.after = current;
  cdm::Transfer settled = transfer;
  settled.status = cdm::TransferStatus::Settled;
  primitive.after.transferHistory.push_back(std::move(settled));
  return wrap(current.trade.tradeId + "/TRANSFER/" + transfer.transferId, eventTime,
              std::move(primitive));
}

}  // namespace irsim::lifecycle
