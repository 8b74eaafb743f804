// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/events/simulator_events.hpp"

namespace irsim::events {
namespace {

template <typename T>
T get(const Json& j, std::string_view key) {
  return requireField(j, key).get<T>();
}

}  // namespace

void to_json(Json& j, const ExecutionOccurred& v) {
  j = Json{{"businessEvent", v.businessEvent},
           {"counterpartyNames", Json::array({v.counterpartyNames[0], v.counterpartyNames[1]})}};
}

void from_json(const Json& j, ExecutionOccurred& v) {
  v.businessEvent = get<cdm::BusinessEvent>(j, "businessEvent");
  const auto names = get<std::vector<std::string>>(j, "counterpartyNames");
  if (names.size() != 2) throw Error(ErrorCode::InvalidArgument, "expected two counterparty names");
  v.counterpartyNames = {names[0], names[1]};
}

void to_json(Json& j, const TradeConfirmed& v) { j = Json{{"businessEvent", v.businessEvent}}; }
void from_json(const Json& j, TradeConfirmed& v) {
  v.businessEvent = get<cdm::BusinessEvent>(j, "businessEvent");
}

void to_json(Json& j, const TradeRejected& v) { j = Json{{"tradeId", v.tradeId}}; }
void from_json(const Json& j, TradeRejected& v) { v.tradeId = requireString(j, "tradeId"); }

void to_json(Json& j, const RateReset& v) {
  j = Json{{"businessEvent", v.businessEvent}, {"periodIndex", v.periodIndex}};
}
void from_json(const Json& j, RateReset& v) {
  v.businessEvent = get<cdm::BusinessEvent>(j, "businessEvent");
  v.periodIndex = get<int>(j, "periodIndex");
}

void to_json(Json& j, const CashTransferred& v) {
  j = Json{{"businessEvent", v.businessEvent}, {"leg", v.leg}, {"periodIndex", v.periodIndex}};
}
void from_json(const Json& j, CashTransferred& v) {
  v.businessEvent = get<cdm::BusinessEvent>(j, "businessEvent");
  v.leg = requireEnum<LegKind>(j, "leg");
  v.periodIndex = get<int>(j, "periodIndex");
}

void to_json(Json& j, const TradeMatured& v) { j = Json{{"tradeId", v.tradeId}}; }
void from_json(const Json& j, TradeMatured& v) { v.tradeId = requireString(j, "tradeId"); }

void to_json(Json& j, const PaymentInstructed& v) {
  j = Json{{"transfer", v.transfer},
           {"tradeId", v.tradeId},
           {"leg", v.leg},
           {"periodIndex", v.periodIndex}};
}
void from_json(const Json& j, PaymentInstructed& v) {
  v.transfer = get<cdm::Transfer>(j, "transfer");
  v.tradeId = requireString(j, "tradeId");
  v.leg = requireEnum<LegKind>(j, "leg");
  v.periodIndex = get<int>(j, "periodIndex");
}

void to_json(Json& j, const PaymentSettled& v) {
  j = Json{{"transferId", v.transferId}, {"settlementDate", v.settlementDate}};
}
void from_json(const Json& j, PaymentSettled& v) {
  v.transferId = requireString(j, "transferId");
  v.settlementDate = get<Date>(j, "settlementDate");
}

void to_json(Json& j, const DeadlineScheduled& v) { j = Json{{"deadline", v.deadline}}; }
void from_json(const Json& j, DeadlineScheduled& v) { v.deadline = get<Deadline>(j, "deadline"); }

void to_json(Json& j, const DeadlineCancelled& v) {
  j = Json{{"deadlineId", v.deadlineId}, {"tradeId", v.tradeId}};
}
void from_json(const Json& j, DeadlineCancelled& v) {
  v.deadlineId = requireString(j, "deadlineId");
  v.tradeId = requireString(j, "tradeId");
}

void to_json(Json& j, const DeadlineBreached& v) { j = Json{{"deadline", v.deadline}}; }
void from_json(const Json& j, DeadlineBreached& v) { v.deadline = get<Deadline>(j, "deadline"); }

void to_json(Json& j, const FailedLifecycleAction& v) {
  j = Json{{"deadlineId", v.deadlineId}, {"tradeId", v.tradeId},     {"kind", v.kind},
           {"periodIndex", v.periodIndex}, {"errorCode", v.errorCode}, {"reason", v.reason}};
}
void from_json(const Json& j, FailedLifecycleAction& v) {
  v.deadlineId = requireString(j, "deadlineId");
  v.tradeId = requireString(j, "tradeId");
  v.kind = requireEnum<DeadlineKind>(j, "kind");
  v.periodIndex = get<int>(j, "periodIndex");
  v.errorCode = requireString(j, "errorCode");
  v.reason = requireString(j, "reason");
}

void to_json(Json& j, const ClockCreated& v) { j = Json{{"clockId", v.clockId}, {"time", v.time}}; }
void from_json(const Json& j, ClockCreated& v) {
  v.clockId = requireString(j, "clockId");
  v.time = get<DateTime>(j, "time");
}

void to_json(Json& j, const ClockAdvanced& v) {
  j = Json{{"clockId", v.clockId}, {"from", v.from}, {"to", v.to}};
}
void from_json(const Json& j, ClockAdvanced& v) {
  v.clockId = requireString(j, "clockId");
  v.from = get<DateTime>(j, "from");
  v.to = get<DateTime>(j, "to");
}

std::optional<cdm::BusinessEventType> cdmEventType(const store::EventEnvelope& envelope) {
  if (!envelope.isCdmEvent) return std::nullopt;
  const auto it = envelope.payload.find("businessEvent");
  if (it == envelope.payload.end()) return std::nullopt;
  return requireEnum<cdm::BusinessEventType>(*it, "qualifiedType");
}

namespace aggregate {
std::string trade(const cdm::TradeId& tradeId) { return "irs:" + tradeId; }
std::string payment(const std::string& transferId) { return "payment:" + transferId; }
}  // namespace aggregate

}  // namespace irsim::events
