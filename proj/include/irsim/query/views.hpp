// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

// Materialised views served by the query side.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irsim/lifecycle/json.hpp"
#include "irsim/cdm/types.hpp"
#include "irsim/lifecycle/deadlines.hpp"

namespace irsim::query {

using lifecycle::LegKind;

/// Seen from Party1: Pay when Party1 is the payer.
enum class CashflowDirection { Pay, Receive };

/// A cashflow that has actually been transferred.
struct Cashflow {
  std::string transferId;
  Date date;
  LegKind leg = LegKind::Fixed;
  int periodIndex = 0;
  Decimal amount;
  CashflowDirection direction = CashflowDirection::Pay;
  bool settled = false;

  friend bool operator==(const Cashflow&, const Cashflow&) = default;
};

/// A scheduled cashflow. Floating amounts are unknown until the period is
/// reset.
struct ProjectedCashflow {
  Date date;
  LegKind leg = LegKind::Fixed;
  int periodIndex = 0;
  std::optional<Decimal> amount;
  CashflowDirection direction = CashflowDirection::Pay;
  bool settled = false;

  friend bool operator==(const ProjectedCashflow&, const ProjectedCashflow&) = default;
};

struct BlotterRow {
  cdm::TradeId tradeId;
  std::array<std::string, 2> counterpartyNames;
  cdm::ProductQualification productType = cdm::ProductQualification::Unqualified;
  Decimal notional;
  std::string currency;
  std::optional<Decimal> fixedRate;
  std::optional<std::string> floatingIndex;
  std::optional<int> floatingTenorMonths;
  Date effectiveDate;
  Date terminationDate;
  cdm::TradeStatus status = cdm::TradeStatus::Executed;
  std::vector<std::string> openActions;
  std::vector<Cashflow> cashflows;
  std::vector<ProjectedCashflow> projectedCashflows;

  friend bool operator==(const BlotterRow&, const BlotterRow&) = default;
};

struct EventStreamRow {
  std::int64_t globalSequence = 0;
  std::string simulatorEventName;
  std::optional<cdm::BusinessEventType> cdmEventType;
  DateTime simulationTime;
  std::string aggregateId;

  friend bool operator==(const EventStreamRow&, const EventStreamRow&) = default;
};

struct NextDeadline {
  std::string name;
  DateTime dueTime;
  std::string deadlineId;
  cdm::TradeId tradeId;

  friend bool operator==(const NextDeadline&, const NextDeadline&) = default;
};

struct NextDeadlineView {
  std::optional<NextDeadline> deadline;

  friend bool operator==(const NextDeadlineView&, const NextDeadlineView&) = default;
};

inline constexpr const char* kConfirmExecutionAction = "CONFIRM_EXECUTION";

}  // namespace irsim::query

namespace irsim {
IRSIM_ENUM_NAMES(query::CashflowDirection, {query::CashflowDirection::Pay, "PAY"},
                 {query::CashflowDirection::Receive, "RECEIVE"});
}

namespace irsim::query {

using irsim::from_json;
using irsim::to_json;

void to_json(Json& j, const Cashflow& v);
void from_json(const Json& j, Cashflow& v);
void to_json(Json& j, const ProjectedCashflow& v);
void from_json(const Json& j, ProjectedCashflow& v);
void to_json(Json& j, const BlotterRow& v);
void from_json(const Json& j, BlotterRow& v);
void to_json(Json& j, const EventStreamRow& v);
void from_json(const Json& j, EventStreamRow& v);
void to_json(Json& j, const NextDeadlineView& v);
void from_json(const Json& j, NextDeadlineView& v);

}  // namespace irsim::query
