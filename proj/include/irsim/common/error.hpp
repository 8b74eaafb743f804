// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace irsim {

/// Machine-readable failure categories shared by every module. The API
/// gateway maps each one onto exactly one HTTP status.
enum class ErrorCode {
  InvalidArgument,
  InvalidTrade,
  InvalidTransition,
  InvalidSchedule,
  InvalidInterval,
  DuplicateTrade,
  UnknownParty,
  AlreadyReset,
  AlreadyPaid,
  ResetMissing,
  NotFound,
  ConcurrencyConflict,
  UnroutableCommand,
  DuplicateHandler,
  ClockRegression,
  NothingScheduled,
  AlreadyExists,
  NoClock,
  PartyInUse,
  DuplicateLei,
  StorageFailure,
};

/// SCREAMING_SNAKE_CASE name, e.g. "INVALID_TRANSITION".
std::string_view errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace irsim
