#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tempweak/manifest.hpp"
#include "tempweak/raster.hpp"

namespace tempweak {

struct RefinementReport {
  double threshold = 0.0;
  std::uint32_t iteration = 0;  // iteration of the filtered manifest
  std::vector<std::string> kept;
  std::vector<std::pair<std::string, double>> filtered;  // id, fraction
};

struct RefinementResult {
  DatasetManifest manifest;
  RefinementReport report;
};

double changed_fraction(const ChangeMask& mask);

// Drops every train record whose predicted changed fraction strictly exceeds
// the threshold; a prediction at exactly the threshold is kept. Records in
// the val and test splits pass through untouched and need no prediction.
// The filtered manifest records its origin and carries iteration + 1.
RefinementResult filter_manifest(
    const DatasetManifest& manifest,
    const std::map<std::string, ChangeMask>& predictions, double threshold,
    const std::string& parent_path = "");

std::string serialize_report(const RefinementReport& report);

}  // namespace tempweak
