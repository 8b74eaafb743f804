// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <span>
#include <vector>

#include "irsim/store/envelope.hpp"

namespace irsim::store {

/// Durable medium behind the event store. Implementations only persist;
/// sequencing and concurrency checks belong to EventStore.
class StorageBackend {
 public:
  virtual ~StorageBackend() = default;

  /// Every record previously written, in write order.
  virtual std::vector<EventEnvelope> load() = 0;
  /// Persists a batch. Must either persist all records or throw.
  virtual void write(std::span<const EventEnvelope> batch) = 0;
  /// Discards every record.
  virtual void clear() = 0;
};

class MemoryBackend final : public StorageBackend {
 public:
  std::vector<EventEnvelope> load() override { return {}; }
  void write(std::span<const EventEnvelope>) override {}
  void clear() override {}
};

/// Single-file append log. The file is a sequence of records, each a 4-byte
/// big-endian length followed by that many bytes of UTF-8 JSON. The first
/// record is the header {"format":"irsim-event-log","version":"1"}; every
/// following record is one EventEnvelope.
class FileBackend final : public StorageBackend {
 public:
  static constexpr const char* kFormatName = "irsim-event-log";
  static constexpr const char* kFormatVersion = "1";

  explicit FileBackend(std::filesystem::path path);

  std::vector<EventEnvelope> load() override;
  void write(std::span<const EventEnvelope> batch) override;
  void clear() override;

  const std::filesystem::path& path() const { return path_; }

 private:
  void writeHeader();

  std::filesystem::path path_;
  std::ofstream out_;
};

/// Frames one JSON text as a length-prefixed record.
std::string encodeRecord(const std::string& json);

std::unique_ptr<StorageBackend> makeMemoryBackend();
std::unique_ptr<StorageBackend> makeFileBackend(const std::filesystem::path& path);

}  // namespace irsim::store
