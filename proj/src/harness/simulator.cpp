// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/harness/simulator.hpp"

namespace irsim::harness {

Simulator::Simulator(SimulatorOptions options) : options_(std::move(options)), seed_(options_.seed) {
  const bool file = options_.storage == StorageKind::File;
  store_ = std::make_unique<store::EventStore>(
      file ? store::makeFileBackend(options_.dataDir / "events.log") : store::makeMemoryBackend());
  bus_ = std::make_unique<store::CommandBus>();
  registry_ = std::make_unique<network::PartyRegistry>(
      file ? std::optional{options_.dataDir / "parties.json"} : std::nullopt);
  clock_ = std::make_unique<SimulationClock>(*store_);
  scheduler_ = std::make_unique<Scheduler>(*store_, *clock_);
  // Commands carry the simulation time, so nothing happens before a clock
  // exists.
  fmi_ = std::make_unique<fmi::FmiService>(
      *store_, *bus_, [this](const cdm::PartyId& id) { return registry_->findParty(id); },
      [this] { return clock_->getTime(); }, [this] { return seed_; });
  projector_ = std::make_unique<query::Projector>(*store_);
  registry_->setInUsePredicate([this](const cdm::PartyId& id) { return fmi_->isPartyInUse(id); });
  rebuildFromStore();
}

Simulator::~Simulator() { registry_->setInUsePredicate(nullptr); }

void Simulator::resetSimulation(std::optional<std::uint64_t> seed) {
  store_->resetStore();
  clock_->clear();
  scheduler_->clear();
  fmi_->clear();
  projector_->clear();
  if (seed) seed_ = *seed;
}

void Simulator::rebuildFromStore() {
  clock_->clear();
  scheduler_->clear();
  for (const auto& e : store_->readAll()) {
    clock_->apply(e);
    scheduler_->apply(e);
  }
  fmi_->rebuild();
  projector_->rebuild();
}

}  // namespace irsim::harness
