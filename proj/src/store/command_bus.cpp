// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/store/command_bus.hpp"

namespace irsim::store {

void CommandBus::registerHandler(const std::string& commandType, CommandHandler handler) {
  std::lock_guard lock(mutex_);
  if (!handlers_.emplace(commandType, std::move(handler)).second) {
    throw Error(ErrorCode::DuplicateHandler, "a handler is already registered for " + commandType);
  }
}

bool CommandBus::hasHandler(const std::string& commandType) const {
  std::lock_guard lock(mutex_);
  return handlers_.count(commandType) > 0;
}

CommandResult CommandBus::dispatch(const CommandEnvelope& command) const {
  if (command.targetAggregateId.empty()) {
    return CommandResult::failure(ErrorCode::InvalidArgument, "command has no target aggregate");
  }
  CommandHandler handler;
  {
    std::lock_guard lock(mutex_);
    const auto it = handlers_.find(command.commandType);
    if (it == handlers_.end()) {
      return CommandResult::failure(ErrorCode::UnroutableCommand,
                                    "no handler registered for " + command.commandType);
    }
    handler = it->second;
  }
  try {
    return CommandResult::success(handler(command));
  } catch (const Error& e) {
    return CommandResult::failure(e.code(), e.what());
  } catch (const Json::exception& e) {
    return CommandResult::failure(ErrorCode::InvalidArgument,
                                  std::string("malformed command payload: ") + e.what());
  }
}

}  // namespace irsim::store
