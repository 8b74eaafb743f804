// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>

#include "irsim/fmi/fmi_service.hpp"
#include "irsim/harness/clock.hpp"
#include "irsim/harness/scheduler.hpp"
#include "irsim/network/party_registry.hpp"
#include "irsim/query/projector.hpp"
#include "irsim/store/command_bus.hpp"
#include "irsim/store/event_store.hpp"

namespace irsim::harness {

enum class StorageKind { Memory, File };

struct SimulatorOptions {
  std::uint64_t seed = 42;
  StorageKind storage = StorageKind::Memory;
  /// File storage keeps events.log and parties.json here.
  std::filesystem::path dataDir = "data";
};

/// Composition root: one event store shared by the FMI, the query side and
/// the simulation harness, plus the party registry.
///
/// Not thread-safe by itself; callers serialize access (the API gateway
/// holds a lock per request).
class Simulator {
 public:
  explicit Simulator(SimulatorOptions options = {});
  ~Simulator();

  Simulator(const Simulator&) = delete;
  Simulator& operator=(const Simulator&) = delete;

  store::EventStore& store() { return *store_; }
  store::CommandBus& bus() { return *bus_; }
  SimulationClock& clock() { return *clock_; }
  Scheduler& scheduler() { return *scheduler_; }
  fmi::FmiService& fmi() { return *fmi_; }
  query::Projector& projector() { return *projector_; }
  network::PartyRegistry& registry() { return *registry_; }

  const SimulatorOptions& options() const { return options_; }
  std::uint64_t seed() const { return seed_; }

  /// Starts a new run: erases the event log and every derived view, keeps
  /// the party registry. A given seed replaces the current one.
  void resetSimulation(std::optional<std::uint64_t> seed = std::nullopt);

  /// Re-derives clock, scheduler, aggregates and views from the store.
  void rebuildFromStore();

 private:
  SimulatorOptions options_;
  std::uint64_t seed_;
  std::unique_ptr<store::EventStore> store_;
  std::unique_ptr<store::CommandBus> bus_;
  std::unique_ptr<network::PartyRegistry> registry_;
  std::unique_ptr<SimulationClock> clock_;
  std::unique_ptr<Scheduler> scheduler_;
  std::unique_ptr<fmi::FmiService> fmi_;
  std::unique_ptr<query::Projector> projector_;
};

}  // namespace irsim::harness
