// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/fmi/fmi_service.hpp"

#include <algorithm>

#include "irsim/cdm/qualification.hpp"
#include "irsim/cdm/validation.hpp"
#include "irsim/lifecycle/day_count.hpp"
#include "irsim/lifecycle/events.hpp"
#include "irsim/lifecycle/schedule.hpp"

namespace irsim::fmi {

using namespace irsim::events;
using lifecycle::LegKind;
using store::CommandEnvelope;
using store::EventEnvelope;

namespace {

constexpr const char* kTradePrefix = "irs:";
constexpr const char* kPaymentPrefix = "payment:";

const cdm::InterestRatePayout& legOf(const cdm::TradeState& state, LegKind leg) {
  const auto& product = state.trade.tradableProduct.product;
  const auto* payout = leg == LegKind::Fixed ? cdm::fixedLeg(product) : cdm::floatingLeg(product);
  if (payout == nullptr) {
    throw Error(ErrorCode::InvalidTransition, "trade " + state.trade.tradeId + " has no " +
                                                  (leg == LegKind::Fixed ? "fixed" : "floating") +
                                                  " leg");
  }
  return *payout;
}

lifecycle::CalculationPeriod periodOf(const cdm::InterestRatePayout& leg, int periodIndex) {
  const auto schedule = lifecycle::generateSchedule(leg.periods);
  if (periodIndex < 0 || periodIndex >= static_cast<int>(schedule.size())) {
    throw Error(ErrorCode::InvalidArgument,
                "period " + std::to_string(periodIndex) + " is outside the schedule");
  }
  return schedule[static_cast<std::size_t>(periodIndex)];
}

void requireConfirmed(const IrsAggregate& a, const char* action) {
  if (a.status() != cdm::TradeStatus::Confirmed) {
    throw Error(ErrorCode::InvalidTransition,
                std::string(action) + " requires a confirmed trade; " + a.tradeId + " is " +
                    std::string(enumName(a.status())));
  }
}

std::size_t periodCount(const cdm::InterestRatePayout& leg) {
  return lifecycle::generateSchedule(leg.periods).size();
}

}  // namespace

FmiService::FmiService(store::EventStore& store, store::CommandBus& bus, PartyLookup parties,
                       TimeSource now, SeedSource seed)
    : store_(store),
      bus_(bus),
      parties_(std::move(parties)),
      now_(std::move(now)),
      seed_(std::move(seed)) {
  bus_.registerHandler(SubmitExecution::kType,
                       [this](const CommandEnvelope& c) { return handleSubmitExecution(c); });
  bus_.registerHandler(Consent::kType, [this](const CommandEnvelope& c) { return handleConsent(c); });
  bus_.registerHandler(TriggerReset::kType,
                       [this](const CommandEnvelope& c) { return handleTriggerReset(c); });
  bus_.registerHandler(TriggerPayment::kType,
                       [this](const CommandEnvelope& c) { return handleTriggerPayment(c); });
  bus_.registerHandler(SettlePayment::kType,
                       [this](const CommandEnvelope& c) { return handleSettlePayment(c); });
  initiatorSubscription_ = store_.subscribe(
      store::SubscriptionFilter::types({DeadlineBreached::kType}),
      [this](const EventEnvelope& e) { onDeadlineBreached(decode<DeadlineBreached>(e)); });
}

FmiService::~FmiService() { store_.unsubscribe(initiatorSubscription_); }

store::CommandResult FmiService::submitExecution(const cdm::Trade& trade) {
  return bus_.dispatch(envelopeFor(SubmitExecution{trade}));
}

store::CommandResult FmiService::consent(const cdm::TradeId& tradeId, ConsentDecision decision) {
  return bus_.dispatch(envelopeFor(Consent{tradeId, decision}));
}

store::CommandResult FmiService::triggerReset(const cdm::TradeId& tradeId, int periodIndex) {
  return bus_.dispatch(envelopeFor(TriggerReset{tradeId, periodIndex}));
}

store::CommandResult FmiService::triggerPayment(const cdm::TradeId& tradeId, LegKind leg,
                                                int periodIndex) {
  return bus_.dispatch(envelopeFor(TriggerPayment{tradeId, leg, periodIndex}));
}

const IrsAggregate& FmiService::requireTrade(const cdm::TradeId& tradeId) const {
  const auto it = trades_.find(tradeId);
  if (it == trades_.end() || !it->second.exists()) {
    throw Error(ErrorCode::NotFound, "trade " + tradeId + " not found");
  }
  return it->second;
}

std::vector<EventEnvelope> FmiService::appendToTrade(const cdm::TradeId& tradeId,
                                                     std::vector<store::DomainEvent> events) {
  auto& aggregate = trades_[tradeId];
  auto envelopes =
      store_.append(aggregate::trade(tradeId), aggregate.version, std::move(events), now_());
  for (const auto& e : envelopes) aggregate = applyIrsEvent(std::move(aggregate), e);
  return envelopes;
}

std::vector<EventEnvelope> FmiService::appendToPayment(const std::string& transferId,
                                                       std::vector<store::DomainEvent> events) {
  auto& aggregate = payments_[transferId];
  auto envelopes =
      store_.append(aggregate::payment(transferId), aggregate.version, std::move(events), now_());
  for (const auto& e : envelopes) aggregate = applyPaymentEvent(std::move(aggregate), e);
  return envelopes;
}

std::vector<EventEnvelope> FmiService::handleSubmitExecution(const CommandEnvelope& command) {
  const auto trade = command.payload.get<SubmitExecution>().trade;
  if (trade.tradeId.empty()) throw Error(ErrorCode::InvalidTrade, "trade id must be set");
  if (const auto it = trades_.find(trade.tradeId); it != trades_.end() && it->second.exists()) {
    throw Error(ErrorCode::DuplicateTrade, "trade " + trade.tradeId + " already exists");
  }
  const auto report = cdm::validateTrade(trade);
  if (!report.ok()) throw Error(ErrorCode::InvalidTrade, report.summary());
  if (cdm::qualifyProduct(trade.tradableProduct.product) !=
      cdm::ProductQualification::InterestRateSwapFixedFloat) {
    throw Error(ErrorCode::InvalidTrade, "only fixed-vs-floating interest rate swaps are supported");
  }

  ExecutionOccurred occurred;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& cp = trade.tradableProduct.counterparties[i];
    const auto party = parties_(cp.partyRef);
    if (!party) {
      throw Error(ErrorCode::UnknownParty, "party " + cp.partyRef + " is not registered");
    }
    const std::size_t slot = cp.role == cdm::CounterpartyRole::Party1 ? 0 : 1;
    occurred.counterpartyNames[slot] = party->name;
  }
  occurred.businessEvent = lifecycle::createExecutionEvent(trade, now_());
  return appendToTrade(trade.tradeId, {toDomainEvent(occurred)});
}

std::vector<EventEnvelope> FmiService::handleConsent(const CommandEnvelope& command) {
  const auto consent = command.payload.get<Consent>();
  const auto& aggregate = requireTrade(consent.tradeId);
  if (aggregate.status() != cdm::TradeStatus::Executed) {
    throw Error(ErrorCode::InvalidTransition,
                "trade " + consent.tradeId + " is " + std::string(enumName(aggregate.status())) +
                    "; consent applies to executed trades only");
  }
  if (consent.decision == ConsentDecision::Reject) {
    return appendToTrade(consent.tradeId, {toDomainEvent(TradeRejected{consent.tradeId})});
  }
  TradeConfirmed confirmed{lifecycle::createContractFormationEvent(*aggregate.currentState, now_())};
  std::vector<store::DomainEvent> emitted{toDomainEvent(confirmed)};
  for (const auto& deadline :
       lifecycle::projectDeadlines(confirmed.businessEvent.primitives.back().after)) {
    emitted.push_back(toDomainEvent(DeadlineScheduled{deadline}));
  }
  return appendToTrade(consent.tradeId, std::move(emitted));
}

std::vector<EventEnvelope> FmiService::handleTriggerReset(const CommandEnvelope& command) {
  const auto trigger = command.payload.get<TriggerReset>();
  const auto& aggregate = requireTrade(trigger.tradeId);
  requireConfirmed(aggregate, "reset");
  const auto& state = *aggregate.currentState;
  const auto& leg = legOf(state, LegKind::Floating);
  const auto period = periodOf(leg, trigger.periodIndex);
  if (aggregate.resetRates.count(trigger.periodIndex)) {
    throw Error(ErrorCode::AlreadyReset, "period " + std::to_string(trigger.periodIndex) +
                                             " of " + trigger.tradeId + " is already reset");
  }
  const auto& floating = std::get<cdm::FloatingRate>(leg.rate);
  const auto observation = lifecycle::resolveObservation(floating.index, floating.tenorMonths,
                                                         period.adjustedStart, seed_());
  RateReset reset{lifecycle::createResetEvent(state, observation, now_()), trigger.periodIndex};
  return appendToTrade(trigger.tradeId, {toDomainEvent(reset)});
}

std::vector<EventEnvelope> FmiService::handleTriggerPayment(const CommandEnvelope& command) {
  const auto trigger = command.payload.get<TriggerPayment>();
  const auto& aggregate = requireTrade(trigger.tradeId);
  requireConfirmed(aggregate, "payment");
  const auto& state = *aggregate.currentState;
  const auto& leg = legOf(state, trigger.leg);
  const auto period = periodOf(leg, trigger.periodIndex);
  if (aggregate.paidPeriods.count({trigger.leg, trigger.periodIndex})) {
    throw Error(ErrorCode::AlreadyPaid, std::string(enumName(trigger.leg)) + " period " +
                                            std::to_string(trigger.periodIndex) + " of " +
                                            trigger.tradeId + " is already paid");
  }

  std::optional<Decimal> observed;
  if (trigger.leg == LegKind::Floating) {
    const auto rate = aggregate.resetRates.find(trigger.periodIndex);
    if (rate == aggregate.resetRates.end()) {
      throw Error(ErrorCode::ResetMissing, "floating period " + std::to_string(trigger.periodIndex) +
                                               " of " + trigger.tradeId + " has not been reset");
    }
    observed = rate->second;
  }
  Decimal amount = lifecycle::periodAmount(leg, period, observed);

  cdm::Transfer transfer;
  transfer.transferId = trigger.tradeId + "/" + std::string(enumName(trigger.leg)) + "/" +
                        std::to_string(trigger.periodIndex);
  transfer.payerPartyRef = leg.payerPartyRef;
  transfer.receiverPartyRef = leg.receiverPartyRef;
  if (amount.isNegative()) {
    // A spread below minus the fixing reverses the flow.
    std::swap(transfer.payerPartyRef, transfer.receiverPartyRef);
    amount = -amount;
  }
  transfer.amount = amount;
  transfer.currency = leg.currency;
  transfer.settlementDate = period.paymentDate;
  transfer.status = cdm::TransferStatus::Instructed;

  // Validate the CDM transition before touching the payment aggregate.
  auto businessEvent = lifecycle::createCashTransferEvent(state, transfer, now_());

  appendToPayment(transfer.transferId,
                  {toDomainEvent(PaymentInstructed{transfer, trigger.tradeId, trigger.leg,
                                                   trigger.periodIndex})});
  const auto settled = bus_.dispatch(envelopeFor(SettlePayment{transfer.transferId}));
  if (!settled.ok) throw Error(*settled.error, settled.reason);

  const std::size_t totalPeriods =
      periodCount(legOf(state, LegKind::Fixed)) + periodCount(legOf(state, LegKind::Floating));
  const bool final = aggregate.paidPeriods.size() + 1 == totalPeriods;
  const auto tradeId = trigger.tradeId;

  std::vector<store::DomainEvent> emitted{
      toDomainEvent(CashTransferred{std::move(businessEvent), trigger.leg, trigger.periodIndex})};
  if (final) emitted.push_back(toDomainEvent(TradeMatured{tradeId}));

  auto envelopes = settled.envelopes;
  const auto own = appendToTrade(tradeId, std::move(emitted));
  envelopes.insert(envelopes.end(), own.begin(), own.end());
  return envelopes;
}

std::vector<EventEnvelope> FmiService::handleSettlePayment(const CommandEnvelope& command) {
  const auto settle = command.payload.get<SettlePayment>();
  const auto it = payments_.find(settle.transferId);
  if (it == payments_.end() || !it->second.transfer) {
    throw Error(ErrorCode::NotFound, "payment " + settle.transferId + " not found");
  }
  if (it->second.settled()) {
    throw Error(ErrorCode::InvalidTransition, "payment " + settle.transferId + " is already settled");
  }
  return appendToPayment(settle.transferId,
                         {toDomainEvent(PaymentSettled{settle.transferId,
                                                       it->second.transfer->settlementDate})});
}

void FmiService::onDeadlineBreached(const DeadlineBreached& event) {
  const auto& d = event.deadline;
  store::CommandResult result;
  switch (d.kind) {
    case lifecycle::DeadlineKind::Reset:
      result = triggerReset(d.tradeId, d.periodIndex);
      break;
    case lifecycle::DeadlineKind::FixedPayment:
      result = triggerPayment(d.tradeId, LegKind::Fixed, d.periodIndex);
      break;
    case lifecycle::DeadlineKind::FloatingPayment:
      result = triggerPayment(d.tradeId, LegKind::Floating, d.periodIndex);
      break;
  }
  if (result.ok) return;
  FailedLifecycleAction failed{d.deadlineId, d.tradeId, d.kind, d.periodIndex,
                               std::string(errorCodeName(*result.error)), result.reason};
  store_.append(aggregate::kLifecycleInitiator, std::nullopt, {toDomainEvent(failed)}, now_());
}

std::optional<IrsAggregate> FmiService::trade(const cdm::TradeId& tradeId) const {
  const auto it = trades_.find(tradeId);
  if (it == trades_.end() || !it->second.exists()) return std::nullopt;
  return it->second;
}

std::optional<PaymentAggregate> FmiService::payment(const std::string& transferId) const {
  const auto it = payments_.find(transferId);
  if (it == payments_.end()) return std::nullopt;
  return it->second;
}

std::vector<cdm::TradeId> FmiService::tradeIds() const {
  std::vector<cdm::TradeId> ids;
  for (const auto& [id, aggregate] : trades_) {
    if (aggregate.exists()) ids.push_back(id);
  }
  return ids;
}

IrsAggregate FmiService::replayTrade(const cdm::TradeId& tradeId) const {
  return store_.replayAggregate(aggregate::trade(tradeId), IrsAggregate{}, applyIrsEvent);
}

PaymentAggregate FmiService::replayPayment(const std::string& transferId) const {
  return store_.replayAggregate(aggregate::payment(transferId), PaymentAggregate{}, applyPaymentEvent);
}

bool FmiService::isPartyInUse(const cdm::PartyId& partyId) const {
  for (const auto& [id, aggregate] : trades_) {
    if (!aggregate.exists()) continue;
    const auto status = aggregate.status();
    if (status != cdm::TradeStatus::Executed && status != cdm::TradeStatus::Confirmed) continue;
    const auto& cps = aggregate.currentState->trade.tradableProduct.counterparties;
    if (std::any_of(cps.begin(), cps.end(),
                    [&](const cdm::Counterparty& c) { return c.partyRef == partyId; })) {
      return true;
    }
  }
  return false;
}

void FmiService::clear() {
  trades_.clear();
  payments_.clear();
}

void FmiService::rebuild() {
  clear();
  const std::string tradePrefix = kTradePrefix;
  const std::string paymentPrefix = kPaymentPrefix;
  for (const auto& e : store_.readAll()) {
    if (e.aggregateId.rfind(tradePrefix, 0) == 0) {
      auto& a = trades_[e.aggregateId.substr(tradePrefix.size())];
      a = applyIrsEvent(std::move(a), e);
    } else if (e.aggregateId.rfind(paymentPrefix, 0) == 0) {
      auto& a = payments_[e.aggregateId.substr(paymentPrefix.size())];
      a = applyPaymentEvent(std::move(a), e);
    }
  }
}

}  // namespace irsim::fmi
