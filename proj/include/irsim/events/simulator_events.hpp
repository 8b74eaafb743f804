// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

// Simulator events: the routable wrappers persisted in the event store.
// CDM business events travel inside ExecutionOccurred, TradeConfirmed,
// RateReset and CashTransferred under the "businessEvent" key.

#pragma once

#include <array>
#include <string>

#include "irsim/cdm/types.hpp"
#include "irsim/lifecycle/deadlines.hpp"
#include "irsim/lifecycle/json.hpp"
#include "irsim/store/envelope.hpp"

namespace irsim::events {

using lifecycle::Deadline;
using lifecycle::DeadlineKind;
using lifecycle::LegKind;

struct ExecutionOccurred {
  static constexpr const char* kType = "ExecutionOccurred";
  static constexpr bool kCdm = true;
  cdm::BusinessEvent businessEvent;
  /// Party names as registered at submission, Party1 first.
  std::array<std::string, 2> counterpartyNames;
};

struct TradeConfirmed {
  static constexpr const char* kType = "TradeConfirmed";
  static constexpr bool kCdm = true;
  cdm::BusinessEvent businessEvent;
};

struct TradeRejected {
  static constexpr const char* kType = "TradeRejected";
  static constexpr bool kCdm = false;
  cdm::TradeId tradeId;
};

struct RateReset {
  static constexpr const char* kType = "RateReset";
  static constexpr bool kCdm = true;
  cdm::BusinessEvent businessEvent;
  int periodIndex = 0;
};

struct CashTransferred {
  static constexpr const char* kType = "CashTransferred";
  static constexpr bool kCdm = true;
  cdm::BusinessEvent businessEvent;
  LegKind leg = LegKind::Fixed;
  int periodIndex = 0;
};

struct TradeMatured {
  static constexpr const char* kType = "TradeMatured";
  static constexpr bool kCdm = false;
  cdm::TradeId tradeId;
};

struct PaymentInstructed {
  static constexpr const char* kType = "PaymentInstructed";
  static constexpr bool kCdm = false;
  cdm::Transfer transfer;
  cdm::TradeId tradeId;
  LegKind leg = LegKind::Fixed;
  int periodIndex = 0;
};

struct PaymentSettled {
  static constexpr const char* kType = "PaymentSettled";
  static constexpr bool kCdm = false;
  std::string transferId;
  Date settlementDate;
};

struct DeadlineScheduled {
  static constexpr const char* kType = "DeadlineScheduled";
  static constexpr bool kCdm = false;
  Deadline deadline;
};

struct DeadlineCancelled {
  static constexpr const char* kType = "DeadlineCancelled";
  static constexpr bool kCdm = false;
  std::string deadlineId;
  cdm::TradeId tradeId;
};

struct DeadlineBreached {
  static constexpr const char* kType = "DeadlineBreached";
  static constexpr bool kCdm = false;
  /// Status is Triggered.
  Deadline deadline;
};

struct FailedLifecycleAction {
  static constexpr const char* kType = "FailedLifecycleAction";
  static constexpr bool kCdm = false;
  std::string deadlineId;
  cdm::TradeId tradeId;
  DeadlineKind kind = DeadlineKind::Reset;
  int periodIndex = 0;
  std::string errorCode;
  std::string reason;
};

struct ClockCreated {
  static constexpr const char* kType = "ClockCreated";
  static constexpr bool kCdm = false;
  std::string clockId;
  DateTime time;
};

struct ClockAdvanced {
  static constexpr const char* kType = "ClockAdvanced";
  static constexpr bool kCdm = false;
  std::string clockId;
  DateTime from;
  DateTime to;
};

void to_json(Json& j, const ExecutionOccurred& v);
void from_json(const Json& j, ExecutionOccurred& v);
void to_json(Json& j, const TradeConfirmed& v);
void from_json(const Json& j, TradeConfirmed& v);
void to_json(Json& j, const TradeRejected& v);
void from_json(const Json& j, TradeRejected& v);
void to_json(Json& j, const RateReset& v);
void from_json(const Json& j, RateReset& v);
void to_json(Json& j, const CashTransferred& v);
void from_json(const Json& j, CashTransferred& v);
void to_json(Json& j, const TradeMatured& v);
void from_json(const Json& j, TradeMatured& v);
void to_json(Json& j, const PaymentInstructed& v);
void from_json(const Json& j, PaymentInstructed& v);
void to_json(Json& j, const PaymentSettled& v);
void from_json(const Json& j, PaymentSettled& v);
void to_json(Json& j, const DeadlineScheduled& v);
void from_json(const Json& j, DeadlineScheduled& v);
void to_json(Json& j, const DeadlineCancelled& v);
void from_json(const Json& j, DeadlineCancelled& v);
void to_json(Json& j, const DeadlineBreached& v);
void from_json(const Json& j, DeadlineBreached& v);
void to_json(Json& j, const FailedLifecycleAction& v);
void from_json(const Json& j, FailedLifecycleAction& v);
void to_json(Json& j, const ClockCreated& v);
void from_json(const Json& j, ClockCreated& v);
void to_json(Json& j, const ClockAdvanced& v);
void from_json(const Json& j, ClockAdvanced& v);

template <typename E>
store::DomainEvent toDomainEvent(const E& event) {
  return store::DomainEvent{E::kType, Json(event), E::kCdm};
}

template <typename E>
bool is(const store::EventEnvelope& envelope) {
  return envelope.eventType == E::kType;
}

template <typename E>
E decode(const store::EventEnvelope& envelope) {
  return envelope.payload.get<E>();
}

/// Qualified type of the wrapped business event, for CDM envelopes.
std::optional<cdm::BusinessEventType> cdmEventType(const store::EventEnvelope& envelope);

namespace aggregate {
/// Stream ids. Trades and payments get one stream each; the scheduler,
/// clock and lifecycle initiator each own a single stream.
std::string trade(const cdm::TradeId& tradeId);
std::string payment(const std::string& transferId);
inline constexpr const char* kScheduler = "scheduler";
inline constexpr const char* kClock = "clock";
inline constexpr const char* kLifecycleInitiator = "lifecycle-initiator";
}  // namespace aggregate

}  // namespace irsim::events
