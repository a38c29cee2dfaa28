#include "tempweak/manifest.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace tempweak {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, std::size_t line,
                       const std::string& what) {
  throw ParseError(origin + ": line " + std::to_string(line) + ": " + what);
}

bool iso_date(const std::string& s) {
  if (s.size() < 10) return false;
  for (int i : {0, 1, 2, 3, 5, 6, 8, 9})
    if (!std::isdigit(static_cast<unsigned char>(s[static_cast<std::size_t>(i)])))
      return false;
  return s[4] == '-' && s[7] == '-';
}

std::string require_string(const Json& obj, const char* key,
                           const std::string& origin, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end())
    fail(origin, line, std::string("missing field '") + key + "'");
  if (!it->is_string())
    fail(origin, line, std::string("field '") + key + "' must be a string");
  std::string value = it->get<std::string>();
  if (value.empty())
    fail(origin, line, std::string("field '") + key + "' must not be empty");
  return value;
}

void require_relative(const std::string& path, const char* key,
                      const std::string& origin, std::size_t line) {
  if (std::filesystem::path(path).is_absolute())
    fail(origin, line, std::string("field '") + key +
                           "' must be relative to the manifest directory");
}

std::optional<std::string> optional_string(const Json& obj, const char* key,
                                           const std::string& origin,
                                           std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string())
    fail(origin, line, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

PairRecord parse_record(const Json& obj, const std::string& origin,
                        std::size_t line) {
  static const std::set<std::string> known = {
      "id",     "image_t",     "image_t2", "mask_t", "mask_t2",
      "pred_change", "split",  "resolution", "date_t", "date_t2"};
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.count(it.key()))
      fail(origin, line, "unknown field '" + it.key() + "'");

  PairRecord r;
  r.id = require_string(obj, "id", origin, line);
  r.image_t = require_string(obj, "image_t", origin, line);
  r.image_t2 = require_string(obj, "image_t2", origin, line);
  r.mask_t = require_string(obj, "mask_t", origin, line);
  r.mask_t2 = optional_string(obj, "mask_t2", origin, line);
  r.pred_change = optional_string(obj, "pred_change", origin, line);
  require_relative(r.image_t, "image_t", origin, line);
  require_relative(r.image_t2, "image_t2", origin, line);
  require_relative(r.mask_t, "mask_t", origin, line);
  if (r.mask_t2) require_relative(*r.mask_t2, "mask_t2", origin, line);
  if (r.pred_change)
    require_relative(*r.pred_change, "pred_change", origin, line);

  const std::string split = require_string(obj, "split", origin, line);
  try {
    r.split = split_from_string(split);
  } catch (const ArgumentError& e) {
    fail(origin, line, e.what());
  }

  auto res = obj.find("resolution");
  if (res == obj.end()) fail(origin, line, "missing field 'resolution'");
  if (!res->is_number())
    fail(origin, line, "field 'resolution' must be a number");
  r.resolution = res->get<double>();
  if (!(r.resolution > 0.0))
    fail(origin, line, "field 'resolution' must be positive");

  r.date_t = optional_string(obj, "date_t", origin, line);
  r.date_t2 = optional_string(obj, "date_t2", origin, line);
  for (const auto& d : {r.date_t, r.date_t2})
    if (d && !iso_date(*d))
      fail(origin, line, "date '" + *d + "' is not of the form YYYY-MM-DD");
  return r;
}

Json record_to_json(const PairRecord& r) {
  Json obj;
  obj["id"] = r.id;
  obj["image_t"] = r.image_t;
  obj["image_t2"] = r.image_t2;
  obj["mask_t"] = r.mask_t;
  if (r.mask_t2) obj["mask_t2"] = *r.mask_t2;
  if (r.pred_change) obj["pred_change"] = *r.pred_change;
  obj["split"] = to_string(r.split);
  obj["resolution"] = r.resolution;
  if (r.date_t) obj["date_t"] = *r.date_t;
  if (r.date_t2) obj["date_t2"] = *r.date_t2;
  return obj;
}

}  // namespace

std::string to_string(Split split) {
  switch (split) {
    case Split::train: return "train";
    case Split::val: return "val";
    case Split::test: return "test";
  }
  throw ArgumentError("unknown split value");
}

Split split_from_string(const std::string& text) {
  if (text == "train") return Split::train;
  if (text == "val") return Split::val;
  if (text == "test") return Split::test;
  throw ArgumentError("split must be train, val or test, got '" + text + "'");
}

DatasetManifest parse_manifest_stream(std::istream& in,
                                      const std::string& origin) {
  DatasetManifest manifest;
  std::string line;
  std::size_t line_no = 0;
  std::set<std::string> seen_ids;
  bool header_read = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      if (!in.eof()) fail(origin, line_no, "empty line");
      continue;
    }
    Json obj;
    try {
      obj = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      fail(origin, line_no, e.what());
    }
    if (!obj.is_object()) fail(origin, line_no, "expected an object");
    if (!header_read) {
      auto it = obj.find("iteration");
      if (it == obj.end() || !it->is_number_unsigned())
        fail(origin, line_no,
             "header must carry an unsigned 'iteration' field");
      manifest.iteration = it->get<std::uint32_t>();
      if (auto parent = optional_string(obj, "parent", origin, line_no))
        manifest.parent = *parent;
      for (auto field = obj.begin(); field != obj.end(); ++field)
        if (field.key() != "iteration" && field.key() != "parent")
          fail(origin, line_no, "unknown header field '" + field.key() + "'");
      header_read = true;
      continue;
    }
    PairRecord record = parse_record(obj, origin, line_no);
    if (!seen_ids.insert(record.id).second)
      fail(origin, line_no, "duplicate id '" + record.id + "'");
    manifest.records.push_back(std::move(record));
  }
  return manifest;
}

DatasetManifest parse_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  DatasetManifest manifest = parse_manifest_stream(in, path.string());
  manifest.base_dir = path.parent_path();
  manifest.source_path = path.string();
  return manifest;
}

std::string serialize_manifest(const DatasetManifest& manifest) {
  std::ostringstream out;
  Json header;
  header["iteration"] = manifest.iteration;
  if (!manifest.parent.empty()) header["parent"] = manifest.parent;
  out << header.dump() << '\n';
  for (const PairRecord& r : manifest.records)
    out << record_to_json(r).dump() << '\n';
  return out.str();
}

void write_manifest(const DatasetManifest& manifest,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << serialize_manifest(manifest);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace tempweak
