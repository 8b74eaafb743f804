// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "irsim/common/date.hpp"
#include "irsim/common/decimal.hpp"

namespace irsim::lifecycle {

struct Observation {
  std::string index;
  int tenorMonths = 0;
  Date observationDate;
  Decimal rate;

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Simulated index fixing. The rate is a pure function of the four inputs,
/// uniform over [0, 0.10) on a 0.00001 grid, and identical on every
/// platform: the inputs seed a std::seed_seq feeding std::mt19937_64, both of
/// which are fully specified by the standard.
/// Throws Error(InvalidArgument) when tenorMonths <= 0.
Observation resolveObservation(const std::string& index, int tenorMonths, const Date& observationDate,
                               std::uint64_t seed);

}  // namespace irsim::lifecycle
