// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/fmi/commands.hpp"

#include "irsim/events/simulator_events.hpp"

namespace irsim::fmi {
namespace {

template <typename C>
store::CommandEnvelope wrap(const C& command, std::string target, std::string id) {
  return store::CommandEnvelope{std::move(id), std::move(target), C::kType, Json(command),
                                std::nullopt};
}

}  // namespace

void to_json(Json& j, const SubmitExecution& v) { j = Json{{"trade", v.trade}}; }
void from_json(const Json& j, SubmitExecution& v) {
  v.trade = requireField(j, "trade").get<cdm::Trade>();
}

void to_json(Json& j, const Consent& v) {
  j = Json{{"tradeId", v.tradeId}, {"decision", v.decision}};
}
void from_json(const Json& j, Consent& v) {
  v.tradeId = requireString(j, "tradeId");
  v.decision = requireEnum<ConsentDecision>(j, "decision");
}

void to_json(Json& j, const TriggerReset& v) {
  j = Json{{"tradeId", v.tradeId}, {"periodIndex", v.periodIndex}};
}
void from_json(const Json& j, TriggerReset& v) {
  v.tradeId = requireString(j, "tradeId");
  v.periodIndex = requireField(j, "periodIndex").get<int>();
}

void to_json(Json& j, const TriggerPayment& v) {
  j = Json{{"tradeId", v.tradeId}, {"leg", v.leg}, {"periodIndex", v.periodIndex}};
}
void from_json(const Json& j, TriggerPayment& v) {
  v.tradeId = requireString(j, "tradeId");
  v.leg = requireEnum<lifecycle::LegKind>(j, "leg");
  v.periodIndex = requireField(j, "periodIndex").get<int>();
}

void to_json(Json& j, const SettlePayment& v) { j = Json{{"transferId", v.transferId}}; }
void from_json(const Json& j, SettlePayment& v) { v.transferId = requireString(j, "transferId"); }

store::CommandEnvelope envelopeFor(const SubmitExecution& c) {
  return wrap(c, events::aggregate::trade(c.trade.tradeId), c.trade.tradeId + "/submit");
}
store::CommandEnvelope envelopeFor(const Consent& c) {
  return wrap(c, events::aggregate::trade(c.tradeId), c.tradeId + "/consent");
}
store::CommandEnvelope envelopeFor(const TriggerReset& c) {
  return wrap(c, events::aggregate::trade(c.tradeId),
              c.tradeId + "/reset/" + std::to_string(c.periodIndex));
}
store::CommandEnvelope envelopeFor(const TriggerPayment& c) {
  return wrap(c, events::aggregate::trade(c.tradeId),
              c.tradeId + "/pay/" + std::string(enumName(c.leg)) + "/" +
                  std::to_string(c.periodIndex));
}
store::CommandEnvelope envelopeFor(const SettlePayment& c) {
  return wrap(c, events::aggregate::payment(c.transferId), c.transferId + "/settle");
}

}  // namespace irsim::fmi
