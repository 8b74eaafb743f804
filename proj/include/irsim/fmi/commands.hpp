// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "irsim/cdm/types.hpp"
#include "irsim/lifecycle/deadlines.hpp"
#include "irsim/store/envelope.hpp"

namespace irsim::fmi {

using irsim::from_json;
using irsim::to_json;

enum class ConsentDecision { Confirm, Reject };

struct SubmitExecution {
  static constexpr const char* kType = "SubmitExecution";
  cdm::Trade trade;
};

struct Consent {
  static constexpr const char* kType = "Consent";
  cdm::TradeId tradeId;
  ConsentDecision decision = ConsentDecision::Confirm;
};

struct TriggerReset {
  static constexpr const char* kType = "TriggerReset";
  cdm::TradeId tradeId;
  int periodIndex = 0;
};

struct TriggerPayment {
  static constexpr const char* kType = "TriggerPayment";
  cdm::TradeId tradeId;
  lifecycle::LegKind leg = lifecycle::LegKind::Fixed;
  int periodIndex = 0;
};

struct SettlePayment {
  static constexpr const char* kType = "SettlePayment";
  std::string transferId;
};

void to_json(Json& j, const SubmitExecution& v);
void from_json(const Json& j, SubmitExecution& v);
void to_json(Json& j, const Consent& v);
void from_json(const Json& j, Consent& v);
void to_json(Json& j, const TriggerReset& v);
void from_json(const Json& j, TriggerReset& v);
void to_json(Json& j, const TriggerPayment& v);
void from_json(const Json& j, TriggerPayment& v);
void to_json(Json& j, const SettlePayment& v);
void from_json(const Json& j, SettlePayment& v);

/// Wraps a command for the bus, targeting the aggregate it addresses.
store::CommandEnvelope envelopeFor(const SubmitExecution& c);
store::CommandEnvelope envelopeFor(const Consent& c);
store::CommandEnvelope envelopeFor(const TriggerReset& c);
store::CommandEnvelope envelopeFor(const TriggerPayment& c);
store::CommandEnvelope envelopeFor(const SettlePayment& c);

}  // namespace irsim::fmi

namespace irsim {
IRSIM_ENUM_NAMES(fmi::ConsentDecision, {fmi::ConsentDecision::Confirm, "CONFIRM"},
                 {fmi::ConsentDecision::Reject, "REJECT"});
}  // namespace irsim
