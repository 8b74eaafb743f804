// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/query/projector.hpp"

#include <algorithm>
#include <tuple>

#include "irsim/cdm/qualification.hpp"
#include "irsim/events/simulator_events.hpp"
#include "irsim/lifecycle/day_count.hpp"
#include "irsim/lifecycle/schedule.hpp"

namespace irsim::query {

using namespace irsim::events;

namespace {

const cdm::PartyId& party1(const cdm::Trade& trade) {
  const auto& cps = trade.tradableProduct.counterparties;
  return cps[0].role == cdm::CounterpartyRole::Party1 ? cps[0].partyRef : cps[1].partyRef;
}

CashflowDirection directionFor(const cdm::Trade& trade, const cdm::PartyId& payer) {
  return payer == party1(trade) ? CashflowDirection::Pay : CashflowDirection::Receive;
}

CashflowDirection flip(CashflowDirection d) {
  return d == CashflowDirection::Pay ? CashflowDirection::Receive : CashflowDirection::Pay;
}

/// Negative accruals flow the other way; the view shows magnitudes.
void setAmount(ProjectedCashflow& flow, const cdm::Trade& trade, const cdm::InterestRatePayout& leg,
               Decimal amount) {
  flow.direction = directionFor(trade, leg.payerPartyRef);
  if (amount.isNegative()) {
    amount = -amount;
    flow.direction = flip(flow.direction);
  }
  flow.amount = amount;
}

std::vector<ProjectedCashflow> projectCashflows(const cdm::Trade& trade) {
  std::vector<ProjectedCashflow> out;
  const auto& product = trade.tradableProduct.product;
  for (const auto* leg : cdm::interestRatePayouts(product)) {
    const LegKind kind = leg->isFixed() ? LegKind::Fixed : LegKind::Floating;
    for (const auto& period : lifecycle::generateSchedule(leg->periods)) {
      ProjectedCashflow flow;
      flow.date = period.paymentDate;
      flow.leg = kind;
      flow.periodIndex = period.periodIndex;
      flow.direction = directionFor(trade, leg->payerPartyRef);
      if (kind == LegKind::Fixed) setAmount(flow, trade, *leg, lifecycle::periodAmount(*leg, period));
      out.push_back(flow);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.date, a.leg, a.periodIndex) < std::tie(b.date, b.leg, b.periodIndex);
  });
  return out;
}

BlotterRow newRow(const ExecutionOccurred& occurred) {
  const auto& trade = occurred.businessEvent.primitives.back().after.trade;
  const auto summary = trade.tradableProduct.priceQuantitySummary();
  BlotterRow row;
  row.tradeId = trade.tradeId;
  row.counterpartyNames = occurred.counterpartyNames;
  row.productType = cdm::qualifyProduct(trade.tradableProduct.product);
  row.notional = summary.notional;
  row.currency = summary.currency;
  row.fixedRate = summary.fixedRate;
  row.floatingIndex = summary.floatingIndex;
  row.floatingTenorMonths = summary.floatingTenorMonths;
  if (const auto legs = cdm::interestRatePayouts(trade.tradableProduct.product); !legs.empty()) {
    row.effectiveDate = legs.front()->periods.effectiveDate;
    row.terminationDate = legs.front()->periods.terminationDate;
  }
  row.status = cdm::TradeStatus::Executed;
  row.openActions = {kConfirmExecutionAction};
  row.projectedCashflows = projectCashflows(trade);
  return row;
}

}  // namespace

Projector::Projector(store::EventStore& store) : store_(store) {
  subscription_ = store_.subscribe(store::SubscriptionFilter::all(),
                                   [this](const store::EventEnvelope& e) { projectEvent(e); });
}

Projector::~Projector() { store_.unsubscribe(subscription_); }

void Projector::projectEvent(const store::EventEnvelope& envelope) {
  std::unique_lock lock(mutex_);
  if (envelope.globalSequence <= lastSequence_) return;
  project(envelope);
  lastSequence_ = envelope.globalSequence;
}

BlotterRow* Projector::row(const cdm::TradeId& tradeId) {
  const auto it = blotter_.find(tradeId);
  return it == blotter_.end() ? nullptr : &it->second;
}

void Projector::project(const store::EventEnvelope& e) {
  stream_.push_back(EventStreamRow{e.globalSequence, e.eventType, cdmEventType(e), e.simulationTime,
                                   e.aggregateId});

  if (is<ExecutionOccurred>(e)) {
    const auto occurred = decode<ExecutionOccurred>(e);
    auto r = newRow(occurred);
    trades_[r.tradeId] = occurred.businessEvent.primitives.back().after.trade;
    if (!blotter_.count(r.tradeId)) order_.push_back(r.tradeId);
    blotter_[r.tradeId] = std::move(r);
  } else if (is<TradeConfirmed>(e)) {
    const auto event = decode<TradeConfirmed>(e).businessEvent;
    if (auto* r = row(event.tradeId())) {
      r->status = event.primitives.back().after.status;
      r->openActions.clear();
    }
  } else if (is<TradeRejected>(e)) {
    if (auto* r = row(decode<TradeRejected>(e).tradeId)) {
      r->status = cdm::TradeStatus::Rejected;
      r->openActions.clear();
    }
  } else if (is<RateReset>(e)) {
    const auto reset = decode<RateReset>(e);
    const auto& tradeId = reset.businessEvent.tradeId();
    auto* r = row(tradeId);
    const auto trade = trades_.find(tradeId);
    if (r == nullptr || trade == trades_.end()) return;
    const auto* leg = cdm::floatingLeg(trade->second.tradableProduct.product);
    const auto& after = reset.businessEvent.primitives.back().after;
    if (leg == nullptr || after.resetHistory.empty()) return;
    const auto schedule = lifecycle::generateSchedule(leg->periods);
    const auto index = static_cast<std::size_t>(reset.periodIndex);
    if (index >= schedule.size()) return;
    const Decimal amount =
        lifecycle::periodAmount(*leg, schedule[index], after.resetHistory.back().observedRate);
    for (auto& flow : r->projectedCashflows) {
      if (flow.leg == LegKind::Floating && flow.periodIndex == reset.periodIndex) {
        setAmount(flow, trade->second, *leg, amount);
      }
    }
  } else if (is<CashTransferred>(e)) {
    const auto cash = decode<CashTransferred>(e);
    const auto& tradeId = cash.businessEvent.tradeId();
    auto* r = row(tradeId);
    const auto trade = trades_.find(tradeId);
    const auto& after = cash.businessEvent.primitives.back().after;
    if (r == nullptr || trade == trades_.end() || after.transferHistory.empty()) return;
    const auto& transfer = after.transferHistory.back();
    r->cashflows.push_back(Cashflow{transfer.transferId, transfer.settlementDate, cash.leg,
                                    cash.periodIndex, transfer.amount,
                                    directionFor(trade->second, transfer.payerPartyRef),
                                    transfer.status == cdm::TransferStatus::Settled});
    for (auto& flow : r->projectedCashflows) {
      if (flow.leg == cash.leg && flow.periodIndex == cash.periodIndex) flow.settled = true;
    }
    r->status = after.status;
  } else if (is<TradeMatured>(e)) {
    if (auto* r = row(decode<TradeMatured>(e).tradeId)) r->status = cdm::TradeStatus::Matured;
  } else if (is<DeadlineScheduled>(e)) {
    auto d = decode<DeadlineScheduled>(e).deadline;
    openDeadlines_[d.deadlineId] = d;
  } else if (is<DeadlineCancelled>(e)) {
    openDeadlines_.erase(decode<DeadlineCancelled>(e).deadlineId);
  } else if (is<DeadlineBreached>(e)) {
    openDeadlines_.erase(decode<DeadlineBreached>(e).deadline.deadlineId);
  }
}

std::vector<BlotterRow> Projector::queryBlotter() const {
  std::shared_lock lock(mutex_);
  std::vector<BlotterRow> rows;
  rows.reserve(order_.size());
  for (const auto& id : order_) rows.push_back(blotter_.at(id));
  return rows;
}

BlotterRow Projector::queryTrade(const cdm::TradeId& tradeId) const {
  std::shared_lock lock(mutex_);
  const auto it = blotter_.find(tradeId);
  if (it == blotter_.end()) throw Error(ErrorCode::NotFound, "trade " + tradeId + " not found");
  return it->second;
}

std::vector<EventStreamRow> Projector::queryEventStream(std::size_t limit, bool cdmOnly) const {
  if (limit < 1) throw Error(ErrorCode::InvalidArgument, "limit must be at least 1");
  std::shared_lock lock(mutex_);
  std::vector<EventStreamRow> rows;
  for (auto it = stream_.rbegin(); it != stream_.rend() && rows.size() < limit; ++it) {
    if (cdmOnly && !it->cdmEventType) continue;
    rows.push_back(*it);
  }
  return rows;
}

NextDeadlineView Projector::queryNextDeadline() const {
  std::shared_lock lock(mutex_);
  const lifecycle::Deadline* best = nullptr;
  for (const auto& [id, d] : openDeadlines_) {
    if (best == nullptr || lifecycle::deadlineBefore(d, *best)) best = &d;
  }
  if (best == nullptr) return {};
  return NextDeadlineView{
      NextDeadline{lifecycle::deadlineName(*best), best->dueTime, best->deadlineId, best->tradeId}};
}

std::int64_t Projector::lastProjectedSequence() const {
  std::shared_lock lock(mutex_);
  return lastSequence_;
}

void Projector::clear() {
  std::unique_lock lock(mutex_);
  lastSequence_ = 0;
  blotter_.clear();
  order_.clear();
  stream_.clear();
  openDeadlines_.clear();
  trades_.clear();
}

void Projector::rebuild() {
  clear();
  for (const auto& e : store_.readAll()) projectEvent(e);
}

}  // namespace irsim::query
