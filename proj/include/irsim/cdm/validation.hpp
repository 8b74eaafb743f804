// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "irsim/cdm/types.hpp"

namespace irsim::cdm {

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  bool contains(const std::string& violation) const;
  /// Violations joined with "; ".
  std::string summary() const;
};

namespace violation {
inline constexpr const char* kNoPayouts = "product must have at least one payout";
inline constexpr const char* kCounterpartyRoles = "exactly one Party1 and one Party2 required";
inline constexpr const char* kSameCounterparty = "counterparties must be distinct parties";
inline constexpr const char* kUnresolvedParty = "unresolved party reference";
inline constexpr const char* kPayerIsReceiver = "payer and receiver must differ";
inline constexpr const char* kNonPositiveNotional = "notional must be positive";
inline constexpr const char* kMissingCurrency = "currency must be set";
inline constexpr const char* kNonPositiveTenor = "floating tenor must be positive";
inline constexpr const char* kMissingIndex = "floating index must be set";
inline constexpr const char* kDateOrder = "effective date must precede termination date";
inline constexpr const char* kPeriodMultiple =
    "termination date must be a whole number of periods after the effective date";
inline constexpr const char* kMissingTradeId = "trade id must be set";
inline constexpr const char* kTradeDateAfterEffective =
    "trade date must not be after the effective date";
}  // namespace violation

/// Collects every rule violation; an empty report means the product is valid.
ValidationReport validateTradableProduct(const TradableProduct& tp);

/// Product rules plus the trade-level ones (id present, trade date no later
/// than any effective date).
ValidationReport validateTrade(const Trade& trade);

/// Whether `dates` satisfies the schedule invariants (ordering and a whole
/// number of frequency periods).
bool isRegularSchedule(const CalculationPeriodDates& dates);

}  // namespace irsim::cdm
