// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/lifecycle/observation.hpp"

#include <random>
#include <vector>

#include "irsim/common/error.hpp"

namespace irsim::lifecycle {
namespace {

// Rates are k / 100000 for k in [0, 10000).
constexpr std::uint64_t kGridPoints = 10000;
constexpr int kRateDecimals = 5;

}  // namespace

Observation resolveObservation(const std::string& index, int tenorMonths, const Date& observationDate,
                               std::uint64_t seed) {
  if (tenorMonths <= 0) {
    throw Error(ErrorCode::InvalidArgument, "observation tenor must be positive");
  }
  std::vector<std::uint32_t> material;
  material.reserve(index.size() + 5);
  material.push_back(static_cast<std::uint32_t>(seed));
  material.push_back(static_cast<std::uint32_t>(seed >> 32));
  material.push_back(static_cast<std::uint32_t>(tenorMonths));
  const auto serial = static_cast<std::uint64_t>(observationDate.serial());
  material.push_back(static_cast<std::uint32_t>(serial));
  material.push_back(static_cast<std::uint32_t>(serial >> 32));
  for (const unsigned char c : index) material.push_back(c);

  std::seed_seq seq(material.begin(), material.end());
  std::mt19937_64 engine(seq);
  // Multiply-shift maps the 64-bit draw onto the grid without modulo.
  const auto draw = static_cast<unsigned __int128>(engine());
  const auto k = static_cast<std::int64_t>((draw * kGridPoints) >> 64);

  Decimal::Raw raw = k;
  for (int i = 0; i < Decimal::kScale - kRateDecimals; ++i) raw *= 10;
  return Observation{index, tenorMonths, observationDate, Decimal::fromRaw(raw)};
}

}  // namespace irsim::lifecycle
