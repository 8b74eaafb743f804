// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/common/error.hpp"

namespace irsim {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::InvalidTrade: return "INVALID_TRADE";
    case ErrorCode::InvalidTransition: return "INVALID_TRANSITION";
    case ErrorCode::InvalidSchedule: return "INVALID_SCHEDULE";
    case ErrorCode::InvalidInterval: return "INVALID_INTERVAL";
    case ErrorCode::DuplicateTrade: return "DUPLICATE_TRADE";
    case ErrorCode::UnknownParty: return "UNKNOWN_PARTY";
    case ErrorCode::AlreadyReset: return "ALREADY_RESET";
    case ErrorCode::AlreadyPaid: return "ALREADY_PAID";
    case ErrorCode::ResetMissing: return "RESET_MISSING";
    case ErrorCode::NotFound: return "NOT_FOUND";
    case ErrorCode::ConcurrencyConflict: return "CONCURRENCY_CONFLICT";
    case ErrorCode::UnroutableCommand: return "UNROUTABLE_COMMAND";
    case ErrorCode::DuplicateHandler: return "DUPLICATE_HANDLER";
    case ErrorCode::ClockRegression: return "CLOCK_REGRESSION";
    case ErrorCode::NothingScheduled: return "NOTHING_SCHEDULED";
    case ErrorCode::AlreadyExists: return "ALREADY_EXISTS";
    case ErrorCode::NoClock: return "NO_CLOCK";
    case ErrorCode::PartyInUse: return "PARTY_IN_USE";
    case ErrorCode::DuplicateLei: return "DUPLICATE_LEI";
    case ErrorCode::StorageFailure: return "STORAGE_FAILURE";
  }
  return "UNKNOWN";
}

}  // namespace irsim
