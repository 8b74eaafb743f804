// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/lifecycle/deadlines.hpp"

#include <algorithm>
#include <tuple>

#include "irsim/common/error.hpp"
#include "irsim/lifecycle/schedule.hpp"

namespace irsim::lifecycle {

bool deadlineBefore(const Deadline& a, const Deadline& b) {
  return std::tie(a.dueTime, a.kind, a.periodIndex, a.tradeId, a.deadlineId) <
         std::tie(b.dueTime, b.kind, b.periodIndex, b.tradeId, b.deadlineId);
}

std::string deadlineName(const Deadline& d) {
  const std::string period = " period " + std::to_string(d.periodIndex);
  switch (d.kind) {
    case DeadlineKind::Reset: return "Reset" + period + " (Floating)";
    case DeadlineKind::FixedPayment: return "Payment" + period + " (Fixed)";
    case DeadlineKind::FloatingPayment: return "Payment" + period + " (Floating)";
  }
  return "Deadline" + period;
}

std::string makeDeadlineId(const cdm::TradeId& tradeId, DeadlineKind kind, int periodIndex) {
  const char* tag = kind == DeadlineKind::Reset          ? "RESET"
                    : kind == DeadlineKind::FixedPayment ? "FIXED_PAYMENT"
                                                         : "FLOATING_PAYMENT";
  return tradeId + "/" + tag + "/" + std::to_string(periodIndex);
}

std::vector<Deadline> projectDeadlines(const cdm::TradeState& state) {
  if (state.status != cdm::TradeStatus::Confirmed) {
    throw Error(ErrorCode::InvalidTransition, "deadlines are projected for confirmed trades only");
  }
  const auto& tradeId = state.trade.tradeId;
  std::vector<Deadline> out;
  auto add = [&](DeadlineKind kind, const Date& due, int period) {
    out.push_back(Deadline{makeDeadlineId(tradeId, kind, period), tradeId,
                           DateTime(due, kDeadlineTimeOfDay), kind, period, DeadlineStatus::Open});
  };
  for (const auto* leg : cdm::interestRatePayouts(state.trade.tradableProduct.product)) {
    for (const auto& p : generateSchedule(leg->periods)) {
      if (leg->isFloating()) {
        add(DeadlineKind::Reset, p.adjustedStart, p.periodIndex);
        add(DeadlineKind::FloatingPayment, p.paymentDate, p.periodIndex);
      } else {
        add(DeadlineKind::FixedPayment, p.paymentDate, p.periodIndex);
      }
    }
  }
  std::sort(out.begin(), out.end(), deadlineBefore);
  return out;
}

}  // namespace irsim::lifecycle
