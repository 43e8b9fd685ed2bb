#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dmr/trainer.hpp"

namespace dmr {

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
std::uint64_t file_digest(const std::string& path);
std::string digest_hex(std::uint64_t digest);
std::uint64_t parse_digest_hex(const std::string& hex);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

/// Deterministic JSON bytes; identical snapshots serialize identically.
std::string snapshot_to_json(const ModelSnapshot& snapshot);
ModelSnapshot snapshot_from_json(const std::string& text);
void save_snapshot(const ModelSnapshot& snapshot, const std::string& path);
ModelSnapshot load_snapshot(const std::string& path);

/// Everything needed to repeat a command: the resolved flag values plus
/// digests of the input files. The timestamp is informational and excluded
/// from the run digest.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> flags;  // flag name -> value, sorted
  std::vector<std::pair<std::string, std::string>> inputs; // path -> content digest hex
  std::vector<int> fold_assignment;                        // cross-validation only
  std::string timestamp;

  /// Digest over command, flags, and input digests.
  std::uint64_t run_digest() const;
};

std::string manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const std::string& text);
void save_manifest(const RunManifest& manifest, const std::string& path);
RunManifest load_manifest(const std::string& path);

std::string current_timestamp();

}  // namespace dmr
