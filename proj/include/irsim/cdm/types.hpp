// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

// CDM-lite domain model for fixed-vs-floating interest rate swaps. All types
// are immutable-by-convention value types with structural equality.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "irsim/common/date.hpp"
#include "irsim/common/decimal.hpp"

namespace irsim::cdm {

using PartyId = std::string;
using TradeId = std::string;

struct Party {
  PartyId partyId;
  std::string name;
  std::string legalEntityId;

  friend bool operator==(const Party&, const Party&) = default;
};

enum class CounterpartyRole { Party1, Party2 };

struct Counterparty {
  PartyId partyRef;
  CounterpartyRole role = CounterpartyRole::Party1;

  friend bool operator==(const Counterparty&, const Counterparty&) = default;
};

enum class DayCountConvention { Act360, Act365F, Thirty360US };

enum class PaymentFrequency { Monthly, Quarterly, SemiAnnual, Annual };

/// Period length in months: 1, 3, 6 or 12.
int frequencyMonths(PaymentFrequency f);

enum class BusinessDayConvention { None, Following, ModifiedFollowing };

enum class BusinessCalendar { NoHolidays, WeekendsOnly };

struct FixedRate {
  Decimal rate;

  friend bool operator==(const FixedRate&, const FixedRate&) = default;
};

struct FloatingRate {
  std::string index;
  int tenorMonths = 0;
  Decimal spread;

  friend bool operator==(const FloatingRate&, const FloatingRate&) = default;
};

using RateSpecification = std::variant<FixedRate, FloatingRate>;

struct CalculationPeriodDates {
  Date effectiveDate;
  Date terminationDate;
  PaymentFrequency frequency = PaymentFrequency::Quarterly;
  BusinessDayConvention businessDayConvention = BusinessDayConvention::None;
  BusinessCalendar calendar = BusinessCalendar::NoHolidays;

  friend bool operator==(const CalculationPeriodDates&, const CalculationPeriodDates&) = default;
};

struct InterestRatePayout {
  PartyId payerPartyRef;
  PartyId receiverPartyRef;
  Decimal notional;
  std::string currency;
  RateSpecification rate;
  DayCountConvention dayCount = DayCountConvention::Act360;
  CalculationPeriodDates periods;

  bool isFixed() const { return std::holds_alternative<FixedRate>(rate); }
  bool isFloating() const { return std::holds_alternative<FloatingRate>(rate); }

  friend bool operator==(const InterestRatePayout&, const InterestRatePayout&) = default;
};

/// Present only so that product qualification has something to infer an
/// equity swap from; it has no cashflows.
struct EquityPayout {
  PartyId payerPartyRef;
  PartyId receiverPartyRef;
  std::string underlier;

  friend bool operator==(const EquityPayout&, const EquityPayout&) = default;
};

using Payout = std::variant<InterestRatePayout, EquityPayout>;

struct Product {
  std::vector<Payout> payouts;

  friend bool operator==(const Product&, const Product&) = default;
};

enum class ProductQualification {
  InterestRateSwapFixedFloat,
  InterestRateBasisSwap,
  EquitySwap,
  Unqualified,
};

/// Display-only digest of the economic terms.
struct PriceQuantitySummary {
  Decimal notional;
  std::string currency;
  std::optional<Decimal> fixedRate;
  std::optional<std::string> floatingIndex;
  std::optional<int> floatingTenorMonths;

  friend bool operator==(const PriceQuantitySummary&, const PriceQuantitySummary&) = default;
};

struct TradableProduct {
  Product product;
  std::array<Counterparty, 2> counterparties;

  /// Derived from `product`; never stored independently.
  PriceQuantitySummary priceQuantitySummary() const;

  friend bool operator==(const TradableProduct&, const TradableProduct&) = default;
};

struct Trade {
  TradeId tradeId;
  Date tradeDate;
  TradableProduct tradableProduct;

  friend bool operator==(const Trade&, const Trade&) = default;
};

enum class TradeStatus { Executed, Confirmed, Rejected, Matured };

/// Executed->Confirmed, Executed->Rejected and Confirmed->Matured only.
bool isPermittedTransition(TradeStatus from, TradeStatus to);

struct ResetRecord {
  Date observationDate;
  std::string index;
  int tenorMonths = 0;
  Decimal observedRate;

  friend bool operator==(const ResetRecord&, const ResetRecord&) = default;
};

enum class TransferStatus { Instructed, Settled };

struct Transfer {
  std::string transferId;
  PartyId payerPartyRef;
  PartyId receiverPartyRef;
  Decimal amount;
  std::string currency;
  Date settlementDate;
  TransferStatus status = TransferStatus::Instructed;

  friend bool operator==(const Transfer&, const Transfer&) = default;
};

struct TradeState {
  Trade trade;
  TradeStatus status = TradeStatus::Executed;
  std::vector<ResetRecord> resetHistory;
  std::vector<Transfer> transferHistory;

  friend bool operator==(const TradeState&, const TradeState&) = default;
};

enum class PrimitiveKind { Execution, ContractFormation, Reset, Transfer };

struct PrimitiveEvent {
  PrimitiveKind kind = PrimitiveKind::Execution;
  std::optional<TradeState> before;
  TradeState after;

  friend bool operator==(const PrimitiveEvent&, const PrimitiveEvent&) = default;
};

enum class BusinessEventType { Execution, ContractFormation, Reset, CashTransfer, Unqualified };

struct BusinessEvent {
  std::string eventId;
  DateTime eventDate;
  std::optional<std::string> intent;
  std::vector<PrimitiveEvent> primitives;
  BusinessEventType qualifiedType = BusinessEventType::Unqualified;

  /// Trade the event concerns (the last primitive's after-state).
  const TradeId& tradeId() const;

  friend bool operator==(const BusinessEvent&, const BusinessEvent&) = default;
};

/// Interest rate payouts of a product, in payout order.
std::vector<const InterestRatePayout*> interestRatePayouts(const Product& product);
const InterestRatePayout* fixedLeg(const Product& product);
const InterestRatePayout* floatingLeg(const Product& product);

}  // namespace irsim::cdm
