// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/cdm/lineage.hpp"

namespace irsim::cdm {
namespace {

LineageReport broken(std::size_t primitive, std::size_t event, std::string reason) {
  return LineageReport{false, primitive, event, std::move(reason)};
}

}  // namespace

LineageReport checkLineage(std::span<const BusinessEvent> events) {
  const TradeState* previous = nullptr;
  std::size_t flat = 0;
  for (std::size_t e = 0; e < events.size(); ++e) {
    for (const auto& primitive : events[e].primitives) {
      if (flat == 0) {
        if (primitive.kind != PrimitiveKind::Execution || primitive.before) {
          return broken(flat, e, "lineage must start with an execution primitive");
        }
      } else if (!primitive.before) {
        return broken(flat, e, "primitive has no before-state");
      } else if (!(*primitive.before == *previous)) {
        return broken(flat, e, "before-state does not match the preceding after-state");
      }
      previous = &primitive.after;
      ++flat;
    }
  }
  return {};
}

bool isPermittedChange(const PrimitiveEvent& p) {
  if (p.kind == PrimitiveKind::Execution) {
    return !p.before && p.after.status == TradeStatus::Executed && p.after.resetHistory.empty() &&
           p.after.transferHistory.empty();
  }
  if (!p.before) return false;
  const TradeState& before = *p.before;
  TradeState expected = before;
  switch (p.kind) {
    case PrimitiveKind::ContractFormation:
      if (before.status != TradeStatus::Executed) return false;
      expected.status = TradeStatus::Confirmed;
      break;
    case PrimitiveKind::Reset:
      if (p.after.resetHistory.size() != before.resetHistory.size() + 1) return false;
      expected.resetHistory.push_back(p.after.resetHistory.back());
      break;
    case PrimitiveKind::Transfer:
      if (p.after.transferHistory.size() != before.transferHistory.size() + 1) return false;
      expected.transferHistory.push_back(p.after.transferHistory.back());
      break;
    case PrimitiveKind::Execution:
      break;
  }
  return expected == p.after;
}

}  // namespace irsim::cdm
