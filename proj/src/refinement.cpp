#include "tempweak/refinement.hpp"

#include <sstream>

#include "json.hpp"

namespace tempweak {

double changed_fraction(const ChangeMask& mask) {
  if (mask.data.empty()) throw ArgumentError("change mask is empty");
  std::size_t changed = 0;
  for (std::uint8_t v : mask.data) changed += v;
  return static_cast<double>(changed) / static_cast<double>(mask.data.size());
}

RefinementResult filter_manifest(
    const DatasetManifest& manifest,
    const std::map<std::string, ChangeMask>& predictions, double threshold,
    const std::string& parent_path) {
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw ArgumentError("threshold must lie in [0, 1]");

  RefinementResult result;
  result.manifest.iteration = manifest.iteration + 1;
  result.manifest.parent =
      !parent_path.empty() ? parent_path : manifest.source_path;
  result.report.threshold = threshold;
  result.report.iteration = result.manifest.iteration;

  for (const PairRecord& record : manifest.records) {
    if (record.split == Split::train) {
      auto it = predictions.find(record.id);
      if (it == predictions.end())
        throw ArgumentError("no prediction for train record '" + record.id +
                            "'");
      const double fraction = changed_fraction(it->second);
      if (fraction > threshold) {
        result.report.filtered.emplace_back(record.id, fraction);
        continue;
      }
    }
    result.manifest.records.push_back(record);
    result.report.kept.push_back(record.id);
  }
  return result;
}

std::string serialize_report(const RefinementReport& report) {
  using Json = nlohmann::ordered_json;
  std::ostringstream out;
  Json header;
  header["iteration"] = report.iteration;
  header["threshold"] = report.threshold;
  header["kept"] = report.kept.size();
  header["filtered"] = report.filtered.size();
  out << header.dump() << '\n';
  for (const std::string& id : report.kept) {
    Json line;
    line["id"] = id;
    line["status"] = "kept";
    out << line.dump() << '\n';
  }
  for (const auto& [id, fraction] : report.filtered) {
    Json line;
    line["id"] = id;
    line["status"] = "filtered";
    line["changed_fraction"] = fraction;
    out << line.dump() << '\n';
  }
  return out.str();
}

}  // namespace tempweak
