// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "irsim/cdm/types.hpp"

namespace irsim::lifecycle {

/// Declaration order is the tie-break order for deadlines due at the same
/// time: resets first, then fixed payments, then floating payments.
enum class DeadlineKind { Reset, FixedPayment, FloatingPayment };

enum class DeadlineStatus { Open, Triggered };

enum class LegKind { Fixed, Floating };

struct Deadline {
  std::string deadlineId;
  cdm::TradeId tradeId;
  DateTime dueTime;
  DeadlineKind kind = DeadlineKind::Reset;
  int periodIndex = 0;
  DeadlineStatus status = DeadlineStatus::Open;

  friend bool operator==(const Deadline&, const Deadline&) = default;
};

/// Strict weak order on (dueTime, kind, periodIndex), then tradeId and
/// deadlineId so that deadlines of different trades order deterministically.
bool deadlineBefore(const Deadline& a, const Deadline& b);

/// "<Kind> period <i> (<legKind>)", e.g. "Payment period 3 (Floating)".
std::string deadlineName(const Deadline& d);

/// Stable identifier "<tradeId>/<KIND>/<periodIndex>".
std::string makeDeadlineId(const cdm::TradeId& tradeId, DeadlineKind kind, int periodIndex);

/// Time of day at which lifecycle deadlines fall due.
inline constexpr std::chrono::seconds kDeadlineTimeOfDay{0};

/// One Reset and one FloatingPayment per floating period, one FixedPayment
/// per fixed period; all Open and sorted by deadlineBefore.
/// Throws Error(InvalidTransition) unless the state is Confirmed.
std::vector<Deadline> projectDeadlines(const cdm::TradeState& state);

}  // namespace irsim::lifecycle
