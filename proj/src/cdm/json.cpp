// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/cdm/json.hpp"

namespace irsim {

void to_json(Json& j, const Decimal& d) { j = d.toString(); }

void from_json(const Json& j, Decimal& d) {
  if (!j.is_string()) throw Error(ErrorCode::InvalidArgument, "decimal must be a JSON string");
  d = Decimal::parse(j.get<std::string>());
}

void to_json(Json& j, const Date& d) { j = d.toString(); }

void from_json(const Json& j, Date& d) {
  if (!j.is_string()) throw Error(ErrorCode::InvalidArgument, "date must be a JSON string");
  d = Date::parse(j.get<std::string>());
}

void to_json(Json& j, const DateTime& d) { j = d.toString(); }

void from_json(const Json& j, DateTime& d) {
  if (!j.is_string()) throw Error(ErrorCode::InvalidArgument, "date-time must be a JSON string");
  d = DateTime::parse(j.get<std::string>());
}

const Json& requireField(const Json& j, std::string_view key) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorCode::InvalidArgument, "missing field '" + std::string(key) + "'");
  }
  return *it;
}

std::string requireString(const Json& j, std::string_view key) {
  const Json& v = requireField(j, key);
  if (!v.is_string()) {
    throw Error(ErrorCode::InvalidArgument, "field '" + std::string(key) + "' must be a string");
  }
  return v.get<std::string>();
}

}  // namespace irsim

namespace irsim::cdm {
namespace {

template <typename T>
T field(const Json& j, std::string_view key) {
  return requireField(j, key).get<T>();
}

int intField(const Json& j, std::string_view key) {
  const Json& v = requireField(j, key);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::InvalidArgument, "field '" + std::string(key) + "' must be an integer");
  }
  return v.get<int>();
}

}  // namespace

void to_json(Json& j, const Party& v) {
  j = Json{{"partyId", v.partyId}, {"name", v.name}, {"legalEntityId", v.legalEntityId}};
}

void from_json(const Json& j, Party& v) {
  v.partyId = requireString(j, "partyId");
  v.name = requireString(j, "name");
  v.legalEntityId = requireString(j, "legalEntityId");
}

void to_json(Json& j, const Counterparty& v) {
  j = Json{{"partyRef", v.partyRef}, {"role", v.role}};
}

void from_json(const Json& j, Counterparty& v) {
  v.partyRef = requireString(j, "partyRef");
  v.role = requireEnum<CounterpartyRole>(j, "role");
}

void to_json(Json& j, const RateSpecification& v) {
  if (const auto* fixed = std::get_if<FixedRate>(&v)) {
    j = Json{{"type", "FIXED"}, {"rate", fixed->rate}};
  } else {
    const auto& fl = std::get<FloatingRate>(v);
    j = Json{{"type", "FLOATING"},
             {"index", fl.index},
             {"tenorMonths", fl.tenorMonths},
             {"spread", fl.spread}};
  }
}

void from_json(const Json& j, RateSpecification& v) {
  const std::string type = requireString(j, "type");
  if (type == "FIXED") {
    v = FixedRate{field<Decimal>(j, "rate")};
  } else if (type == "FLOATING") {
    FloatingRate fl;
    fl.index = requireString(j, "index");
    fl.tenorMonths = intField(j, "tenorMonths");
    fl.spread = j.contains("spread") ? field<Decimal>(j, "spread") : Decimal{};
    v = fl;
  } else {
    throw Error(ErrorCode::InvalidArgument, "rate type must be FIXED or FLOATING");
  }
}

void to_json(Json& j, const CalculationPeriodDates& v) {
  j = Json{{"effectiveDate", v.effectiveDate},
           {"terminationDate", v.terminationDate},
           {"frequency", v.frequency},
           {"businessDayConvention", v.businessDayConvention},
           {"calendar", v.calendar}};
}

void from_json(const Json& j, CalculationPeriodDates& v) {
  v.effectiveDate = field<Date>(j, "effectiveDate");
  v.terminationDate = field<Date>(j, "terminationDate");
  v.frequency = requireEnum<PaymentFrequency>(j, "frequency");
  v.businessDayConvention = requireEnum<BusinessDayConvention>(j, "businessDayConvention");
  v.calendar = requireEnum<BusinessCalendar>(j, "calendar");
}

void to_json(Json& j, const InterestRatePayout& v) {
  j = Json{{"payerPartyRef", v.payerPartyRef},
           {"receiverPartyRef", v.receiverPartyRef},
           {"notional", v.notional},
           {"currency", v.currency},
           {"rate", v.rate},
           {"dayCount", v.dayCount},
           {"periods", v.periods}};
}

void from_json(const Json& j, InterestRatePayout& v) {
  v.payerPartyRef = requireString(j, "payerPartyRef");
  v.receiverPartyRef = requireString(j, "receiverPartyRef");
  v.notional = field<Decimal>(j, "notional");
  v.currency = requireString(j, "currency");
  v.rate = field<RateSpecification>(j, "rate");
  v.dayCount = requireEnum<DayCountConvention>(j, "dayCount");
  v.periods = field<CalculationPeriodDates>(j, "periods");
}

void to_json(Json& j, const EquityPayout& v) {
  j = Json{{"payerPartyRef", v.payerPartyRef},
           {"receiverPartyRef", v.receiverPartyRef},
           {"underlier", v.underlier}};
}

void from_json(const Json& j, EquityPayout& v) {
  v.payerPartyRef = requireString(j, "payerPartyRef");
  v.receiverPartyRef = requireString(j, "receiverPartyRef");
  v.underlier = requireString(j, "underlier");
}

void to_json(Json& j, const Payout& v) {
  if (const auto* irp = std::get_if<InterestRatePayout>(&v)) {
    j = Json{{"interestRatePayout", *irp}};
  } else {
    j = Json{{"equityPayout", std::get<EquityPayout>(v)}};
  }
}

void from_json(const Json& j, Payout& v) {
  if (j.is_object() && j.contains("interestRatePayout")) {
    v = j.at("interestRatePayout").get<InterestRatePayout>();
  } else if (j.is_object() && j.contains("equityPayout")) {
    v = j.at("equityPayout").get<EquityPayout>();
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "payout must hold 'interestRatePayout' or 'equityPayout'");
  }
}

void to_json(Json& j, const Product& v) { j = Json{{"payouts", v.payouts}}; }

void from_json(const Json& j, Product& v) {
  const Json& payouts = requireField(j, "payouts");
  if (!payouts.is_array()) throw Error(ErrorCode::InvalidArgument, "payouts must be an array");
  v.payouts = payouts.get<std::vector<Payout>>();
}

void to_json(Json& j, const PriceQuantitySummary& v) {
  j = Json{{"notional", v.notional}, {"currency", v.currency}};
  if (v.fixedRate) j["fixedRate"] = *v.fixedRate;
  if (v.floatingIndex) j["floatingIndex"] = *v.floatingIndex;
  if (v.floatingTenorMonths) j["floatingTenorMonths"] = *v.floatingTenorMonths;
}

void to_json(Json& j, const TradableProduct& v) {
  j = Json{{"product", v.product},
           {"counterparties", Json::array({v.counterparties[0], v.counterparties[1]})},
           {"priceQuantitySummary", v.priceQuantitySummary()}};
}

void from_json(const Json& j, TradableProduct& v) {
  v.product = field<Product>(j, "product");
  const Json& cps = requireField(j, "counterparties");
  if (!cps.is_array() || cps.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "counterparties must be an array of two");
  }
  v.counterparties = {cps[0].get<Counterparty>(), cps[1].get<Counterparty>()};
}

void to_json(Json& j, const Trade& v) {
  j = Json{{"tradeId", v.tradeId},
           {"tradeDate", v.tradeDate},
           {"tradableProduct", v.tradableProduct}};
}

void from_json(const Json& j, Trade& v) {
  v.tradeId = requireString(j, "tradeId");
  v.tradeDate = field<Date>(j, "tradeDate");
  v.tradableProduct = field<TradableProduct>(j, "tradableProduct");
}

void to_json(Json& j, const ResetRecord& v) {
  j = Json{{"observationDate", v.observationDate},
           {"index", v.index},
           {"tenorMonths", v.tenorMonths},
           {"observedRate", v.observedRate}};
}

void from_json(const Json& j, ResetRecord& v) {
  v.observationDate = field<Date>(j, "observationDate");
  v.index = requireString(j, "index");
  v.tenorMonths = intField(j, "tenorMonths");
  v.observedRate = field<Decimal>(j, "observedRate");
}

void to_json(Json& j, const Transfer& v) {
  j = Json{{"transferId", v.transferId},
           {"payerPartyRef", v.payerPartyRef},
           {"receiverPartyRef", v.receiverPartyRef},
           {"amount", v.amount},
           {"currency", v.currency},
           {"settlementDate", v.settlementDate},
           {"status", v.status}};
}

void from_json(const Json& j, Transfer& v) {
  v.transferId = requireString(j, "transferId");
  v.payerPartyRef = requireString(j, "payerPartyRef");
  v.receiverPartyRef = requireString(j, "receiverPartyRef");
  v.amount = field<Decimal>(j, "amount");
  v.currency = requireString(j, "currency");
  v.settlementDate = field<Date>(j, "settlementDate");
  v.status = requireEnum<TransferStatus>(j, "status");
}

void to_json(Json& j, const TradeState& v) {
  j = Json{{"trade", v.trade},
           {"status", v.status},
           {"resetHistory", v.resetHistory},
           {"transferHistory", v.transferHistory}};
}

void from_json(const Json& j, TradeState& v) {
  v.trade = field<Trade>(j, "trade");
  v.status = requireEnum<TradeStatus>(j, "status");
  v.resetHistory = field<std::vector<ResetRecord>>(j, "resetHistory");
  v.transferHistory = field<std::vector<Transfer>>(j, "transferHistory");
}

void to_json(Json& j, const PrimitiveEvent& v) {
  j = Json{{"kind", v.kind}, {"after", v.after}};
  if (v.before) j["before"] = *v.before;
}

void from_json(const Json& j, PrimitiveEvent& v) {
  v.kind = requireEnum<PrimitiveKind>(j, "kind");
  v.after = field<TradeState>(j, "after");
  if (j.contains("before")) {
    v.before = j.at("before").get<TradeState>();
  } else {
    v.before.reset();
  }
}

void to_json(Json& j, const BusinessEvent& v) {
  j = Json{{"eventId", v.eventId},
           {"eventDate", v.eventDate},
           {"primitives", v.primitives},
           {"qualifiedType", v.qualifiedType}};
  if (v.intent) j["intent"] = *v.intent;
}

void from_json(const Json& j, BusinessEvent& v) {
  v.eventId = requireString(j, "eventId");
  v.eventDate = field<DateTime>(j, "eventDate");
  v.primitives = field<std::vector<PrimitiveEvent>>(j, "primitives");
  v.qualifiedType = requireEnum<BusinessEventType>(j, "qualifiedType");
  if (j.contains("intent")) {
    v.intent = requireString(j, "intent");
  } else {
    v.intent.reset();
  }
}

}  // namespace irsim::cdm
