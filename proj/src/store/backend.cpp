// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/store/backend.hpp"

#include <array>

#include "irsim/common/error.hpp"

namespace irsim::store {
namespace {

Json headerJson() {
  return Json{{"format", FileBackend::kFormatName}, {"version", FileBackend::kFormatVersion}};
}

std::uint32_t readBigEndian(const std::array<unsigned char, 4>& b) {
  return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) | (std::uint32_t{b[2]} << 8) |
         std::uint32_t{b[3]};
}

}  // namespace

std::string encodeRecord(const std::string& json) {
  if (json.size() > 0xFFFFFFFFu) throw Error(ErrorCode::StorageFailure, "record too large");
  const auto n = static_cast<std::uint32_t>(json.size());
  std::string out;
  out.reserve(json.size() + 4);
  out.push_back(static_cast<char>((n >> 24) & 0xFF));
  out.push_back(static_cast<char>((n >> 16) & 0xFF));
  out.push_back(static_cast<char>((n >> 8) & 0xFF));
  out.push_back(static_cast<char>(n & 0xFF));
  out += json;
  return out;
}

FileBackend::FileBackend(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  const bool fresh = !std::filesystem::exists(path_) || std::filesystem::file_size(path_) == 0;
  if (fresh) {
    writeHeader();
  } else {
    load();  // validates the header before we start appending
    out_.close();
    out_.open(path_, std::ios::binary | std::ios::app);
    if (!out_) throw Error(ErrorCode::StorageFailure, "cannot open " + path_.string());
  }
}

void FileBackend::writeHeader() {
  out_.close();
  out_.open(path_, std::ios::binary | std::ios::trunc);
  if (!out_) throw Error(ErrorCode::StorageFailure, "cannot create " + path_.string());
  const std::string record = encodeRecord(headerJson().dump());
  out_.write(record.data(), static_cast<std::streamsize>(record.size()));
  out_.flush();
}

std::vector<EventEnvelope> FileBackend::load() {
  std::ifstream in(path_, std::ios::binary);
  if (!in) throw Error(ErrorCode::StorageFailure, "cannot read " + path_.string());
  std::vector<EventEnvelope> out;
  bool sawHeader = false;
  std::streamoff goodEnd = 0;
  for (;;) {
    std::array<unsigned char, 4> prefix{};
    in.read(reinterpret_cast<char*>(prefix.data()), 4);
    if (in.gcount() == 0) break;
    if (in.gcount() != 4) break;  // torn length prefix
    std::string body(readBigEndian(prefix), '\0');
    in.read(body.data(), static_cast<std::streamsize>(body.size()));
    if (static_cast<std::size_t>(in.gcount()) != body.size()) break;  // torn record
    const Json j = Json::parse(body, nullptr, false);
    if (j.is_discarded()) {
      throw Error(ErrorCode::StorageFailure, "corrupt record in " + path_.string());
    }
    if (!sawHeader) {
      if (j != headerJson()) {
        throw Error(ErrorCode::StorageFailure,
                    path_.string() + " is not an irsim event log (format version 1)");
      }
      sawHeader = true;
    } else {
      out.push_back(j.get<EventEnvelope>());
    }
    goodEnd = in.tellg();
  }
  if (!sawHeader) throw Error(ErrorCode::StorageFailure, path_.string() + " has no header record");
  // Drop a partially written tail so later appends start on a record boundary.
  if (static_cast<std::uintmax_t>(goodEnd) < std::filesystem::file_size(path_)) {
    out_.close();
    std::filesystem::resize_file(path_, static_cast<std::uintmax_t>(goodEnd));
    out_.open(path_, std::ios::binary | std::ios::app);
  }
  return out;
}

void FileBackend::write(std::span<const EventEnvelope> batch) {
  std::string buffer;
  for (const auto& envelope : batch) buffer += encodeRecord(Json(envelope).dump());
  out_.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  out_.flush();
  if (!out_) throw Error(ErrorCode::StorageFailure, "write to " + path_.string() + " failed");
}

void FileBackend::clear() { writeHeader(); }

std::unique_ptr<StorageBackend> makeMemoryBackend() { return std::make_unique<MemoryBackend>(); }

std::unique_ptr<StorageBackend> makeFileBackend(const std::filesystem::path& path) {
  return std::make_unique<FileBackend>(path);
}

}  // namespace irsim::store
