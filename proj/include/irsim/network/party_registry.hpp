// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "irsim/cdm/types.hpp"

namespace irsim::network {

/// Registry manager for the parties on the network. Plain CRUD state, not
/// event-sourced; it outlives simulation resets. Ids are "P-<n>" and are
/// never handed out twice, even after a delete.
class PartyRegistry {
 public:
  /// True when a live trade references the party.
  using InUsePredicate = std::function<bool(const cdm::PartyId&)>;

  /// With a file, the registry loads it when present and rewrites it after
  /// every change.
  explicit PartyRegistry(std::optional<std::filesystem::path> file = std::nullopt);

  void setInUsePredicate(InUsePredicate predicate);

  /// Throws Error(InvalidArgument) for an empty name and
  /// Error(DuplicateLei) when a non-empty legalEntityId is already taken.
  cdm::Party createParty(const std::string& name, const std::string& legalEntityId);
  /// Throws Error(NotFound).
  cdm::Party getParty(const cdm::PartyId& partyId) const;
  std::optional<cdm::Party> findParty(const cdm::PartyId& partyId) const;
  /// Creation order.
  std::vector<cdm::Party> listParties() const;
  cdm::Party updateParty(const cdm::PartyId& partyId, const std::string& name,
                         const std::string& legalEntityId);
  /// Throws Error(NotFound) or Error(PartyInUse).
  void deleteParty(const cdm::PartyId& partyId);

 private:
  void checkFields(const std::string& name, const std::string& legalEntityId,
                   const cdm::PartyId* self) const;
  std::vector<cdm::Party>::iterator locate(const cdm::PartyId& partyId);
  void load();
  void save() const;

  std::optional<std::filesystem::path> file_;
  InUsePredicate inUse_;
  mutable std::shared_mutex mutex_;
  std::vector<cdm::Party> parties_;
  std::uint64_t nextId_ = 1;
};

}  // namespace irsim::network
