// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "irsim/cdm/json.hpp"
#include "irsim/lifecycle/deadlines.hpp"
#include "irsim/lifecycle/observation.hpp"
#include "irsim/lifecycle/schedule.hpp"

namespace irsim {

IRSIM_ENUM_NAMES(lifecycle::DeadlineKind, {lifecycle::DeadlineKind::Reset, "RESET"},
                 {lifecycle::DeadlineKind::FixedPayment, "FIXED_PAYMENT"},
                 {lifecycle::DeadlineKind::FloatingPayment, "FLOATING_PAYMENT"});
IRSIM_ENUM_NAMES(lifecycle::DeadlineStatus, {lifecycle::DeadlineStatus::Open, "OPEN"},
                 {lifecycle::DeadlineStatus::Triggered, "TRIGGERED"});
IRSIM_ENUM_NAMES(lifecycle::LegKind, {lifecycle::LegKind::Fixed, "FIXED"},
                 {lifecycle::LegKind::Floating, "FLOATING"});

}  // namespace irsim

namespace irsim::lifecycle {

using irsim::from_json;
using irsim::to_json;

void to_json(Json& j, const Deadline& v);
void from_json(const Json& j, Deadline& v);
void to_json(Json& j, const Observation& v);
void from_json(const Json& j, Observation& v);
void to_json(Json& j, const CalculationPeriod& v);

}  // namespace irsim::lifecycle
