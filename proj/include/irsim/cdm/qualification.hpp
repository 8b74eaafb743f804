// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>

#include "irsim/cdm/types.hpp"

namespace irsim::cdm {

/// Infers the product type from its payouts. Payout order is irrelevant.
ProductQualification qualifyProduct(const Product& product);

/// Infers the business event type from its primitives. `intent` is carried
/// for model fidelity; none of the qualified types depend on it. Throws
/// Error(InvalidArgument) for an empty primitive list.
BusinessEventType qualifyBusinessEvent(std::span<const PrimitiveEvent> primitives,
                                       const std::optional<std::string>& intent = std::nullopt);

}  // namespace irsim::cdm
