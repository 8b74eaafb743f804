// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

// The reference run: a one-year quarterly fixed-vs-floating swap taken from
// execution to maturity.

#pragma once

#include <string>

#include "irsim/harness/simulator.hpp"

namespace irsim::harness {

/// 10,000,000 USD, 2024-01-15 to 2025-01-15, quarterly, ACT_360 on both
/// legs, ModifiedFollowing on a weekends-only calendar. The fixed payer
/// (2%) is Party1; the floating leg pays SIM-IBOR 3M flat.
cdm::Trade referenceSwap(const cdm::TradeId& tradeId, const cdm::PartyId& fixedPayer,
                         const cdm::PartyId& floatingPayer);

struct ScenarioResult {
  cdm::TradeId tradeId;
  cdm::PartyId party1;
  cdm::PartyId party2;
  TriggerReport report;
};

/// Reset, register (or reuse) the two parties, create the clock at
/// 2024-01-10, submit and confirm the reference swap, then play.
/// Throws Error when any step is refused.
ScenarioResult runReferenceScenario(Simulator& sim);

}  // namespace irsim::harness
