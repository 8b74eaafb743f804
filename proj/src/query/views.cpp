// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/query/views.hpp"

namespace irsim::query {
namespace {

template <typename T>
void putOptional(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
std::optional<T> getOptional(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(Json& j, const Cashflow& v) {
  j = Json{{"transferId", v.transferId}, {"date", v.date},       {"legKind", v.leg},
           {"periodIndex", v.periodIndex}, {"amount", v.amount}, {"direction", v.direction},
           {"settled", v.settled}};
}

void from_json(const Json& j, Cashflow& v) {
  v.transferId = requireString(j, "transferId");
  v.date = requireField(j, "date").get<Date>();
  v.leg = requireEnum<LegKind>(j, "legKind");
  v.periodIndex = requireField(j, "periodIndex").get<int>();
  v.amount = requireField(j, "amount").get<Decimal>();
  v.direction = requireEnum<CashflowDirection>(j, "direction");
  v.settled = requireField(j, "settled").get<bool>();
}

void to_json(Json& j, const ProjectedCashflow& v) {
  j = Json{{"date", v.date},           {"legKind", v.leg},     {"periodIndex", v.periodIndex},
           {"direction", v.direction}, {"settled", v.settled}};
  putOptional(j, "amount", v.amount);
}

void from_json(const Json& j, ProjectedCashflow& v) {
  v.date = requireField(j, "date").get<Date>();
  v.leg = requireEnum<LegKind>(j, "legKind");
  v.periodIndex = requireField(j, "periodIndex").get<int>();
  v.amount = getOptional<Decimal>(j, "amount");
  v.direction = requireEnum<CashflowDirection>(j, "direction");
  v.settled = requireField(j, "settled").get<bool>();
}

void to_json(Json& j, const BlotterRow& v) {
  j = Json{{"tradeId", v.tradeId},
           {"counterpartyNames", Json::array({v.counterpartyNames[0], v.counterpartyNames[1]})},
           {"productType", v.productType},
           {"notional", v.notional},
           {"currency", v.currency},
           {"effectiveDate", v.effectiveDate},
           {"terminationDate", v.terminationDate},
           {"status", v.status},
           {"openActions", v.openActions},
           {"cashflows", v.cashflows},
           {"projectedCashflows", v.projectedCashflows}};
  putOptional(j, "fixedRate", v.fixedRate);
  putOptional(j, "floatingIndex", v.floatingIndex);
  putOptional(j, "floatingTenorMonths", v.floatingTenorMonths);
}

void from_json(const Json& j, BlotterRow& v) {
  v.tradeId = requireString(j, "tradeId");
  const auto names = requireField(j, "counterpartyNames").get<std::vector<std::string>>();
  if (names.size() != 2) throw Error(ErrorCode::InvalidArgument, "counterpartyNames must hold two names");
  v.counterpartyNames = {names[0], names[1]};
  v.productType = requireEnum<cdm::ProductQualification>(j, "productType");
  v.notional = requireField(j, "notional").get<Decimal>();
  v.currency = requireString(j, "currency");
  v.fixedRate = getOptional<Decimal>(j, "fixedRate");
  v.floatingIndex = getOptional<std::string>(j, "floatingIndex");
  v.floatingTenorMonths = getOptional<int>(j, "floatingTenorMonths");
  v.effectiveDate = requireField(j, "effectiveDate").get<Date>();
  v.terminationDate = requireField(j, "terminationDate").get<Date>();
  v.status = requireEnum<cdm::TradeStatus>(j, "status");
  v.openActions = requireField(j, "openActions").get<std::vector<std::string>>();
  v.cashflows = requireField(j, "cashflows").get<std::vector<Cashflow>>();
  v.projectedCashflows = requireField(j, "projectedCashflows").get<std::vector<ProjectedCashflow>>();
}

void to_json(Json& j, const EventStreamRow& v) {
  j = Json{{"globalSequence", v.globalSequence},
           {"simulatorEventName", v.simulatorEventName},
           {"simulationTime", v.simulationTime},
           {"aggregateId", v.aggregateId}};
  putOptional(j, "cdmEventType", v.cdmEventType);
}

void from_json(const Json& j, EventStreamRow& v) {
  v.globalSequence = requireField(j, "globalSequence").get<std::int64_t>();
  v.simulatorEventName = requireString(j, "simulatorEventName");
  v.simulationTime = requireField(j, "simulationTime").get<DateTime>();
  v.aggregateId = requireString(j, "aggregateId");
  v.cdmEventType = getOptional<cdm::BusinessEventType>(j, "cdmEventType");
}

void to_json(Json& j, const NextDeadlineView& v) {
  j = Json::object();
  if (v.deadline) {
    j["deadline"] = Json{{"name", v.deadline->name},
                         {"dueTime", v.deadline->dueTime},
                         {"deadlineId", v.deadline->deadlineId},
                         {"tradeId", v.deadline->tradeId}};
  }
}

void from_json(const Json& j, NextDeadlineView& v) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "expected a JSON object");
  if (!j.contains("deadline")) {
    v.deadline.reset();
    return;
  }
  const Json& d = j.at("deadline");
  v.deadline = NextDeadline{requireString(d, "name"), requireField(d, "dueTime").get<DateTime>(),
                            requireString(d, "deadlineId"), requireString(d, "tradeId")};
}

}  // namespace irsim::query
