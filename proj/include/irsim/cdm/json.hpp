// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

// Canonical JSON form of the domain model. Field names are camelCase,
// enumerations are SCREAMING_SNAKE_CASE strings, decimals are strings and
// absent optionals are omitted. nlohmann::json keeps object keys sorted, so
// dump() of a serialized value is canonical. Schema: docs/json-schema.md.

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "irsim/cdm/types.hpp"
#include "irsim/common/error.hpp"

namespace irsim {

using Json = nlohmann::json;

template <typename E>
struct EnumNames;

template <typename E>
std::string_view enumName(E value) {
  for (const auto& [v, name] : EnumNames<E>::kNames) {
    if (v == value) return name;
  }
  throw Error(ErrorCode::InvalidArgument, "enumeration value out of range");
}

template <typename E>
E enumFromName(std::string_view name) {
  for (const auto& [v, n] : EnumNames<E>::kNames) {
    if (n == name) return v;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown enumeration name '" + std::string(name) + "'");
}

#define IRSIM_ENUM_NAMES(E, ...)                                                      \
  template <>                                                                         \
  struct EnumNames<E> {                                                               \
    static constexpr std::pair<E, std::string_view> kNames[] = {__VA_ARGS__};         \
  }

IRSIM_ENUM_NAMES(cdm::CounterpartyRole, {cdm::CounterpartyRole::Party1, "PARTY_1"},
                 {cdm::CounterpartyRole::Party2, "PARTY_2"});
IRSIM_ENUM_NAMES(cdm::DayCountConvention, {cdm::DayCountConvention::Act360, "ACT_360"},
                 {cdm::DayCountConvention::Act365F, "ACT_365F"},
                 {cdm::DayCountConvention::Thirty360US, "THIRTY_360_US"});
IRSIM_ENUM_NAMES(cdm::PaymentFrequency, {cdm::PaymentFrequency::Monthly, "MONTHLY"},
                 {cdm::PaymentFrequency::Quarterly, "QUARTERLY"},
                 {cdm::PaymentFrequency::SemiAnnual, "SEMI_ANNUAL"},
                 {cdm::PaymentFrequency::Annual, "ANNUAL"});
IRSIM_ENUM_NAMES(cdm::BusinessDayConvention, {cdm::BusinessDayConvention::None, "NONE"},
                 {cdm::BusinessDayConvention::Following, "FOLLOWING"},
                 {cdm::BusinessDayConvention::ModifiedFollowing, "MODIFIED_FOLLOWING"});
IRSIM_ENUM_NAMES(cdm::BusinessCalendar, {cdm::BusinessCalendar::NoHolidays, "NO_HOLIDAYS"},
                 {cdm::BusinessCalendar::WeekendsOnly, "WEEKENDS_ONLY"});
IRSIM_ENUM_NAMES(cdm::ProductQualification,
                 {cdm::ProductQualification::InterestRateSwapFixedFloat,
                  "INTEREST_RATE_SWAP_FIXED_FLOAT"},
                 {cdm::ProductQualification::InterestRateBasisSwap, "INTEREST_RATE_BASIS_SWAP"},
                 {cdm::ProductQualification::EquitySwap, "EQUITY_SWAP"},
                 {cdm::ProductQualification::Unqualified, "UNQUALIFIED"});
IRSIM_ENUM_NAMES(cdm::TradeStatus, {cdm::TradeStatus::Executed, "EXECUTED"},
                 {cdm::TradeStatus::Confirmed, "CONFIRMED"},
                 {cdm::TradeStatus::Rejected, "REJECTED"},
                 {cdm::TradeStatus::Matured, "MATURED"});
IRSIM_ENUM_NAMES(cdm::TransferStatus, {cdm::TransferStatus::Instructed, "INSTRUCTED"},
                 {cdm::TransferStatus::Settled, "SETTLED"});
IRSIM_ENUM_NAMES(cdm::PrimitiveKind, {cdm::PrimitiveKind::Execution, "EXECUTION"},
                 {cdm::PrimitiveKind::ContractFormation, "CONTRACT_FORMATION"},
                 {cdm::PrimitiveKind::Reset, "RESET"},
                 {cdm::PrimitiveKind::Transfer, "TRANSFER"});
IRSIM_ENUM_NAMES(cdm::BusinessEventType, {cdm::BusinessEventType::Execution, "EXECUTION"},
                 {cdm::BusinessEventType::ContractFormation, "CONTRACT_FORMATION"},
                 {cdm::BusinessEventType::Reset, "RESET"},
                 {cdm::BusinessEventType::CashTransfer, "CASH_TRANSFER"},
                 {cdm::BusinessEventType::Unqualified, "UNQUALIFIED"});

template <typename E>
  requires requires { EnumNames<E>::kNames; }
void to_json(Json& j, E value) {
  j = std::string(enumName(value));
}

template <typename E>
  requires requires { EnumNames<E>::kNames; }
void from_json(const Json& j, E& value) {
  if (!j.is_string()) throw Error(ErrorCode::InvalidArgument, "enumeration must be a string");
  value = enumFromName<E>(j.get<std::string>());
}

void to_json(Json& j, const Decimal& d);
void from_json(const Json& j, Decimal& d);
void to_json(Json& j, const Date& d);
void from_json(const Json& j, Date& d);
void to_json(Json& j, const DateTime& d);
void from_json(const Json& j, DateTime& d);

/// Reads a required string field, raising Error(InvalidArgument) rather
/// than a json exception when it is missing or mistyped.
std::string requireString(const Json& j, std::string_view key);
const Json& requireField(const Json& j, std::string_view key);

template <typename E>
E requireEnum(const Json& j, std::string_view key) {
  return enumFromName<E>(requireString(j, key));
}

}  // namespace irsim

namespace irsim::cdm {

using irsim::from_json;
using irsim::to_json;

void to_json(Json& j, const Party& v);
void from_json(const Json& j, Party& v);
void to_json(Json& j, const Counterparty& v);
void from_json(const Json& j, Counterparty& v);
void to_json(Json& j, const RateSpecification& v);
void from_json(const Json& j, RateSpecification& v);
void to_json(Json& j, const CalculationPeriodDates& v);
void from_json(const Json& j, CalculationPeriodDates& v);
void to_json(Json& j, const InterestRatePayout& v);
void from_json(const Json& j, InterestRatePayout& v);
void to_json(Json& j, const EquityPayout& v);
void from_json(const Json& j, EquityPayout& v);
void to_json(Json& j, const Payout& v);
void from_json(const Json& j, Payout& v);
void to_json(Json& j, const Product& v);
void from_json(const Json& j, Product& v);
void to_json(Json& j, const PriceQuantitySummary& v);
void to_json(Json& j, const TradableProduct& v);
void from_json(const Json& j, TradableProduct& v);
void to_json(Json& j, const Trade& v);
void from_json(const Json& j, Trade& v);
void to_json(Json& j, const ResetRecord& v);
void from_json(const Json& j, ResetRecord& v);
void to_json(Json& j, const Transfer& v);
void from_json(const Json& j, Transfer& v);
void to_json(Json& j, const TradeState& v);
void from_json(const Json& j, TradeState& v);
void to_json(Json& j, const PrimitiveEvent& v);
void from_json(const Json& j, PrimitiveEvent& v);
void to_json(Json& j, const BusinessEvent& v);
void from_json(const Json& j, BusinessEvent& v);

}  // namespace irsim::cdm
