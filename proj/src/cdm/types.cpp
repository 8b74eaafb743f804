// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/cdm/types.hpp"

#include "irsim/common/error.hpp"

namespace irsim::cdm {

int frequencyMonths(PaymentFrequency f) {
  switch (f) {
    case PaymentFrequency::Monthly: return 1;
    case PaymentFrequency::Quarterly: return 3;
    case PaymentFrequency::SemiAnnual: return 6;
    case PaymentFrequency::Annual: return 12;
  }
  return 0;
}

bool isPermittedTransition(TradeStatus from, TradeStatus to) {
  return (from == TradeStatus::Executed && to == TradeStatus::Confirmed) ||
         (from == TradeStatus::Executed && to == TradeStatus::Rejected) ||
         (from == TradeStatus::Confirmed && to == TradeStatus::Matured);
}

PriceQuantitySummary TradableProduct::priceQuantitySummary() const {
  PriceQuantitySummary summary;
  bool haveNotional = false;
  for (const auto* irp : interestRatePayouts(product)) {
    if (!haveNotional) {
      summary.notional = irp->notional;
      summary.currency = irp->currency;
      haveNotional = true;
    }
    if (const auto* fixed = std::get_if<FixedRate>(&irp->rate)) {
      if (!summary.fixedRate) summary.fixedRate = fixed->rate;
    } else if (const auto* floating = std::get_if<FloatingRate>(&irp->rate)) {
      if (!summary.floatingIndex) {
        summary.floatingIndex = floating->index;
        summary.floatingTenorMonths = floating->tenorMonths;
      }
    }
  }
  return summary;
}

const TradeId& BusinessEvent::tradeId() const {
  if (primitives.empty()) {
    throw Error(ErrorCode::InvalidArgument, "business event has no primitives");
  }
  return primitives.back().after.trade.tradeId;
}

std::vector<const InterestRatePayout*> interestRatePayouts(const Product& product) {
  std::vector<const InterestRatePayout*> out;
  for (const auto& payout : product.payouts) {
    if (const auto* irp = std::get_if<InterestRatePayout>(&payout)) out.push_back(irp);
  }
  return out;
}

const InterestRatePayout* fixedLeg(const Product& product) {
  for (const auto* irp : interestRatePayouts(product)) {
    if (irp->isFixed()) return irp;
  }
  return nullptr;
}

const InterestRatePayout* floatingLeg(const Product& product) {
  for (const auto* irp : interestRatePayouts(product)) {
    if (irp->isFloating()) return irp;
  }
  return nullptr;
}

}  // namespace irsim::cdm
