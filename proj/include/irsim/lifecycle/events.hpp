// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

// Business event creation. Each function returns a single-primitive,
// qualified business event whose before-state is the caller's current state.
// Precondition failures throw Error(InvalidTrade) or Error(InvalidTransition).

#pragma once

#include "irsim/cdm/types.hpp"
#include "irsim/lifecycle/observation.hpp"

namespace irsim::lifecycle {

cdm::BusinessEvent createExecutionEvent(const cdm::Trade& trade, const DateTime& eventTime);

cdm::BusinessEvent createContractFormationEvent(const cdm::TradeState& current,
                                                const DateTime& eventTime);

/// The observation must match the floating leg's index and tenor and may not
/// predate the latest recorded reset.
cdm::BusinessEvent createResetEvent(const cdm::TradeState& current, const Observation& observation,
                                    const DateTime& eventTime);

/// Records `transfer` as Settled. Payer and receiver must be the trade's two
/// counterparties and the amount non-negative.
cdm::BusinessEvent createCashTransferEvent(const cdm::TradeState& current, const cdm::Transfer& transfer,
                                           const DateTime& eventTime);

}  // namespace irsim::lifecycle
