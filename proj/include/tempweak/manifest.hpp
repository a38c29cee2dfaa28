#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tempweak/errors.hpp"

namespace tempweak {

enum class Split { train, val, test };

std::string to_string(Split split);
Split split_from_string(const std::string& text);

// One co-registered image pair. Paths are stored relative to the manifest's
// directory. mask_t is the single-date semantic mask driving weak-label
// synthesis; mask_t2, when present, is reserved for supervised evaluation
// and reference map generation, never for weak-label synthesis.
struct PairRecord {
  std::string id;
  std::string image_t;
  std::string image_t2;
  std::string mask_t;
  std::optional<std::string> mask_t2;
  std::optional<std::string> pred_change;
  Split split = Split::train;
  double resolution = 0.0;  // meters per pixel
  std::optional<std::string> date_t;
  std::optional<std::string> date_t2;

  bool operator==(const PairRecord&) const = default;
};

struct DatasetManifest {
  std::vector<PairRecord> records;
  std::uint32_t iteration = 0;
  std::string parent;  // path of the manifest this one was filtered from

  // Provenance of a parsed file; not serialized.
  std::filesystem::path base_dir;
  std::string source_path;

  bool operator==(const DatasetManifest& other) const {
    return records == other.records && iteration == other.iteration &&
           parent == other.parent;
  }

  std::filesystem::path resolve(const std::string& relative) const {
    return base_dir / relative;
  }
};

DatasetManifest parse_manifest(const std::filesystem::path& path);
DatasetManifest parse_manifest_stream(std::istream& in,
                                      const std::string& origin);

void write_manifest(const DatasetManifest& manifest,
                    const std::filesystem::path& path);
std::string serialize_manifest(const DatasetManifest& manifest);

}  // namespace tempweak
