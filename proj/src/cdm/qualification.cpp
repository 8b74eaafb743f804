// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/cdm/qualification.hpp"

#include "irsim/common/error.hpp"

namespace irsim::cdm {

ProductQualification qualifyProduct(const Product& product) {
  int fixed = 0;
  int floating = 0;
  int equity = 0;
  for (const auto& payout : product.payouts) {
    if (const auto* irp = std::get_if<InterestRatePayout>(&payout)) {
      (irp->isFixed() ? fixed : floating) += 1;
    } else {
      ++equity;
    }
  }
  const int rates = fixed + floating;
  if (rates == 2 && equity == 0) {
    if (fixed == 1) return ProductQualification::InterestRateSwapFixedFloat;
    if (floating == 2) return ProductQualification::InterestRateBasisSwap;
  }
  if (rates == 1 && equity == 1) return ProductQualification::EquitySwap;
  return ProductQualification::Unqualified;
}

BusinessEventType qualifyBusinessEvent(std::span<const PrimitiveEvent> primitives,
                                       const std::optional<std::string>& /*intent*/) {
  if (primitives.empty()) {
    throw Error(ErrorCode::InvalidArgument, "business event needs at least one primitive");
  }
  if (primitives.size() != 1) return BusinessEventType::Unqualified;
  switch (primitives.front().kind) {
    case PrimitiveKind::Execution: return BusinessEventType::Execution;
    case PrimitiveKind::ContractFormation: return BusinessEventType::ContractFormation;
    case PrimitiveKind::Reset: return BusinessEventType::Reset;
    case PrimitiveKind::Transfer: return BusinessEventType::CashTransfer;
  }
  return BusinessEventType::Unqualified;
}

}  // namespace irsim::cdm
