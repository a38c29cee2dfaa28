#pragma once

#include <cstdint>
#include <filesystem>

#include "tempweak/manifest.hpp"

namespace tempweak {

// Synthetic pair dataset: rectangular building blobs with optional notches,
// jittered between the two dates, plus one constructed or demolished blob
// in pairs flagged changed. Every pair derives from a generator keyed by
// (seed, pair index), so regeneration is byte-identical.
struct SynthSpec {
  std::uint64_t seed = 0;
  int pair_count = 64;
  int size = 64;
  int blob_count_min = 1;
  int blob_count_max = 4;
  int blob_side_min = 6;
  int blob_side_max = 14;
  double change_rate = 0.1;
  int jitter = 1;
  double resolution = 0.2;  // meters per pixel
};

// Writes images, masks at both dates and manifest.jsonl under out_dir and
// returns the parsed manifest. The changed-pair count is exact by
// construction: floor(pair_count * change_rate) pairs, spread evenly.
DatasetManifest generate_dataset(const SynthSpec& spec,
                                 const std::filesystem::path& out_dir);

}  // namespace tempweak
