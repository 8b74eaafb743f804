// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "irsim/cdm/types.hpp"

namespace irsim::cdm {

struct LineageReport {
  bool ok = true;
  /// Position of the first offending primitive in the flattened list.
  std::optional<std::size_t> breakIndex;
  /// Business event containing that primitive.
  std::optional<std::size_t> eventIndex;
  std::string reason;
};

/// Walks the primitives of `events` in order and verifies that each
/// before-state equals the preceding after-state, starting from an
/// ExecutionPrimitive with no before-state.
LineageReport checkLineage(std::span<const BusinessEvent> events);

/// Whether `primitive.after` differs from `primitive.before` only in the
/// field its kind may change (status, reset history or transfer history),
/// by the permitted amount.
bool isPermittedChange(const PrimitiveEvent& primitive);

}  // namespace irsim::cdm
