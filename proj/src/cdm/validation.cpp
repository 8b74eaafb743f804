// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/cdm/validation.hpp"

#include <algorithm>

namespace irsim::cdm {
namespace {

void add(ValidationReport& report, const char* violation) {
  if (!report.contains(violation)) report.violations.emplace_back(violation);
}

template <typename PayoutT>
void checkParties(const PayoutT& payout, const TradableProduct& tp, ValidationReport& report) {
  auto resolves = [&](const PartyId& ref) {
    return std::any_of(tp.counterparties.begin(), tp.counterparties.end(),
                       [&](const Counterparty& c) { return c.partyRef == ref; });
  };
  if (!resolves(payout.payerPartyRef) || !resolves(payout.receiverPartyRef)) {
    add(report, violation::kUnresolvedParty);
  }
  if (payout.payerPartyRef == payout.receiverPartyRef) add(report, violation::kPayerIsReceiver);
}

}  // namespace

bool ValidationReport::contains(const std::string& v) const {
  return std::find(violations.begin(), violations.end(), v) != violations.end();
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

bool isRegularSchedule(const CalculationPeriodDates& dates) {
  if (!(dates.effectiveDate < dates.terminationDate)) return false;
  const int months = monthsBetween(dates.effectiveDate, dates.terminationDate);
  const int step = frequencyMonths(dates.frequency);
  if (months <= 0 || months % step != 0) return false;
  return dates.effectiveDate.addMonths(months) == dates.terminationDate;
}

ValidationReport validateTradableProduct(const TradableProduct& tp) {
  ValidationReport report;
  const auto& cps = tp.counterparties;
  if (cps[0].role == cps[1].role) add(report, violation::kCounterpartyRoles);
  if (cps[0].partyRef == cps[1].partyRef) add(report, violation::kSameCounterparty);
  if (tp.product.payouts.empty()) add(report, violation::kNoPayouts);

  for (const auto& payout : tp.product.payouts) {
    if (const auto* eq = std::get_if<EquityPayout>(&payout)) {
      checkParties(*eq, tp, report);
      continue;
    }
    const auto& irp = std::get<InterestRatePayout>(payout);
    checkParties(irp, tp, report);
    if (irp.notional <= Decimal{}) add(report, violation::kNonPositiveNotional);
    if (irp.currency.empty()) add(report, violation::kMissingCurrency);
    if (const auto* fl = std::get_if<FloatingRate>(&irp.rate)) {
      if (fl->tenorMonths <= 0) add(report, violation::kNonPositiveTenor);
      if (fl->index.empty()) add(report, violation::kMissingIndex);
    }
    if (!(irp.periods.effectiveDate < irp.periods.terminationDate)) {
      add(report, violation::kDateOrder);
    } else if (!isRegularSchedule(irp.periods)) {
      add(report, violation::kPeriodMultiple);
    }
  }
  return report;
}

ValidationReport validateTrade(const Trade& trade) {
  ValidationReport report = validateTradableProduct(trade.tradableProduct);
  if (trade.tradeId.empty()) add(report, violation::kMissingTradeId);
  for (const auto* irp : interestRatePayouts(trade.tradableProduct.product)) {
    if (irp->periods.effectiveDate < trade.tradeDate) {
      add(report, violation::kTradeDateAfterEffective);
    }
  }
  return report;
}

}  // namespace irsim::cdm
