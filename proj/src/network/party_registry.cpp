// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/network/party_registry.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>

#include "irsim/cdm/json.hpp"

namespace irsim::network {

PartyRegistry::PartyRegistry(std::optional<std::filesystem::path> file) : file_(std::move(file)) {
  if (file_ && std::filesystem::exists(*file_)) load();
}

void PartyRegistry::setInUsePredicate(InUsePredicate predicate) {
  std::unique_lock lock(mutex_);
  inUse_ = std::move(predicate);
}

void PartyRegistry::checkFields(const std::string& name, const std::string& legalEntityId,
                                const cdm::PartyId* self) const {
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "party name must not be empty");
  if (legalEntityId.empty()) return;
  for (const auto& p : parties_) {
    if (p.legalEntityId == legalEntityId && (self == nullptr || p.partyId != *self)) {
      throw Error(ErrorCode::DuplicateLei,
                  "legal entity id " + legalEntityId + " is already registered to " + p.partyId);
    }
  }
}

std::vector<cdm::Party>::iterator PartyRegistry::locate(const cdm::PartyId& partyId) {
  const auto it = std::find_if(parties_.begin(), parties_.end(),
                               [&](const cdm::Party& p) { return p.partyId == partyId; });
  if (it == parties_.end()) throw Error(ErrorCode::NotFound, "party " + partyId + " not found");
  return it;
}

cdm::Party PartyRegistry::createParty(const std::string& name, const std::string& legalEntityId) {
  std::unique_lock lock(mutex_);
  checkFields(name, legalEntityId, nullptr);
  cdm::Party party{"P-" + std::to_string(nextId_), name, legalEntityId};
  ++nextId_;
  parties_.push_back(party);
  save();
  return party;
}

cdm::Party PartyRegistry::getParty(const cdm::PartyId& partyId) const {
  auto party = findParty(partyId);
  if (!party) throw Error(ErrorCode::NotFound, "party " + partyId + " not found");
  return *party;
}

std::optional<cdm::Party> PartyRegistry::findParty(const cdm::PartyId& partyId) const {
  std::shared_lock lock(mutex_);
  for (const auto& p : parties_) {
    if (p.partyId == partyId) return p;
  }
  return std::nullopt;
}

std::vector<cdm::Party> PartyRegistry::listParties() const {
  std::shared_lock lock(mutex_);
  return parties_;
}

cdm::Party PartyRegistry::updateParty(const cdm::PartyId& partyId, const std::string& name,
                                      const std::string& legalEntityId) {
  std::unique_lock lock(mutex_);
  const auto it = locate(partyId);
  checkFields(name, legalEntityId, &partyId);
  it->name = name;
  it->legalEntityId = legalEntityId;
  save();
  return *it;
}

void PartyRegistry::deleteParty(const cdm::PartyId& partyId) {
  std::unique_lock lock(mutex_);
  const auto it = locate(partyId);
  if (inUse_ && inUse_(partyId)) {
    throw Error(ErrorCode::PartyInUse, "party " + partyId + " is referenced by a live trade");
  }
  parties_.erase(it);
  save();
}

void PartyRegistry::load() {
  std::ifstream in(*file_);
  try {
    const Json doc = Json::parse(in);
    parties_ = requireField(doc, "parties").get<std::vector<cdm::Party>>();
    nextId_ = requireField(doc, "nextId").get<std::uint64_t>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::StorageFailure,
                "cannot read party registry " + file_->string() + ": " + e.what());
  }
}

void PartyRegistry::save() const {
  if (!file_) return;
  if (file_->has_parent_path()) std::filesystem::create_directories(file_->parent_path());
  // Write-then-rename so a crash never leaves a half-written registry.
  const auto tmp = std::filesystem::path(file_->string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << Json{{"nextId", nextId_}, {"parties", parties_}}.dump(2) << '\n';
    if (!out) throw Error(ErrorCode::StorageFailure, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, *file_);
}

}  // namespace irsim::network
