// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "irsim/common/error.hpp"
#include "irsim/store/envelope.hpp"

namespace irsim::store {

struct CommandResult {
  bool ok = false;
  std::vector<EventEnvelope> envelopes;
  std::optional<ErrorCode> error;
  std::string reason;

  static CommandResult success(std::vector<EventEnvelope> envelopes) {
    return {true, std::move(envelopes), std::nullopt, {}};
  }
  static CommandResult failure(ErrorCode code, std::string reason) {
    return {false, {}, code, std::move(reason)};
  }
};

/// Returns the envelopes the handler appended; rejects by throwing Error.
using CommandHandler = std::function<std::vector<EventEnvelope>(const CommandEnvelope&)>;

/// Point-to-point command routing: each command type has exactly one
/// handler, invoked synchronously.
class CommandBus {
 public:
  /// Throws Error(DuplicateHandler) if the type already has a handler.
  void registerHandler(const std::string& commandType, CommandHandler handler);

  bool hasHandler(const std::string& commandType) const;

  /// Never throws for routing or handler rejections; those come back as a
  /// failed CommandResult.
  CommandResult dispatch(const CommandEnvelope& command) const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, CommandHandler> handlers_;
};

}  // namespace irsim::store
