#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "tempweak/manifest.hpp"

using namespace tempweak;
namespace fs = std::filesystem;

namespace {

PairRecord sample_record(const std::string& id) {
  PairRecord r;
  r.id = id;
  r.image_t = "images/" + id + "_t.png";
  r.image_t2 = "images/" + id + "_t2.png";
  r.mask_t = "masks/" + id + "_t.png";
  r.split = Split::train;
  r.resolution = 0.2;
  return r;
}

DatasetManifest parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_manifest_stream(in, "test");
}

}  // namespace

TEST_CASE("manifests round trip through serialization") {
  std::mt19937_64 rng(3);
  DatasetManifest manifest;
  manifest.iteration = 2;
  manifest.parent = "runs/manifest_1.jsonl";
  for (int i = 0; i < 20; ++i) {
    PairRecord r = sample_record("rec_" + std::to_string(i));
    if (rng() % 2) r.mask_t2 = "masks/" + r.id + "_t2.png";
    if (rng() % 3 == 0) r.pred_change = "preds/" + r.id + "_change.png";
    if (rng() % 2) {
      r.date_t = "2018-01-12";
      r.date_t2 = "2021-03-04";
    }
    r.split = i % 5 == 0 ? Split::val : (i % 7 == 0 ? Split::test : Split::train);
    r.resolution = 0.2 + 0.01 * static_cast<double>(i);
    manifest.records.push_back(std::move(r));
  }
  const std::string text = serialize_manifest(manifest);
  const DatasetManifest parsed = parse_text(text);
  CHECK(parsed == manifest);
  CHECK(serialize_manifest(parsed) == text);
}

TEST_CASE("serialization emits one header line plus one line per record") {
  DatasetManifest manifest;
  for (int i = 0; i < 64; ++i)
    manifest.records.push_back(sample_record("rec_" + std::to_string(i)));
  const std::string text = serialize_manifest(manifest);
  const std::size_t lines =
      static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  CHECK(lines == 65);
  CHECK(text.back() == '\n');
}

TEST_CASE("optional fields are omitted from serialized records") {
  DatasetManifest manifest;
  manifest.records.push_back(sample_record("solo"));
  const std::string text = serialize_manifest(manifest);
  CHECK(text.find("mask_t2") == std::string::npos);
  CHECK(text.find("pred_change") == std::string::npos);
  CHECK(text.find("date_t") == std::string::npos);
  CHECK(text.find("parent") == std::string::npos);
}

TEST_CASE("an empty file parses as an empty manifest at iteration 0") {
  const DatasetManifest manifest = parse_text("");
  CHECK(manifest.records.empty());
  CHECK(manifest.iteration == 0);
  CHECK(manifest.parent.empty());
}

TEST_CASE("record order is preserved") {
  DatasetManifest manifest;
  for (const char* id : {"zebra", "alpha", "mid"})
    manifest.records.push_back(sample_record(id));
  const DatasetManifest parsed = parse_text(serialize_manifest(manifest));
  REQUIRE(parsed.records.size() == 3);
  CHECK(parsed.records[0].id == "zebra");
  CHECK(parsed.records[1].id == "alpha");
  CHECK(parsed.records[2].id == "mid");
}

TEST_CASE("duplicate ids are parse errors naming the offending line") {
  DatasetManifest manifest;
  manifest.records.push_back(sample_record("twin"));
  std::string text = serialize_manifest(manifest);
  const std::string record_line = text.substr(text.find('\n') + 1);
  text += record_line;  // header line 1, records on lines 2 and 3
  try {
    parse_text(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("twin") != std::string::npos);
  }
}

TEST_CASE("malformed content is rejected with the line number") {
  const std::string header = "{\"iteration\":0}\n";
  CHECK_THROWS_AS(parse_text(header + "{not json}\n"), ParseError);
  CHECK_THROWS_AS(parse_text("[1,2]\n"), ParseError);

  DatasetManifest manifest;
  manifest.records.push_back(sample_record("x"));
  std::string text = serialize_manifest(manifest);

  SUBCASE("missing required field") {
    std::string broken = text;
    const std::size_t at = broken.find("\"mask_t\"");
    broken.erase(at, broken.find(',', at) - at + 1);
    CHECK_THROWS_AS(parse_text(broken), ParseError);
  }
  SUBCASE("unknown field") {
    std::string broken = text;
    broken.replace(broken.find("\"split\""), 7, "\"splat\"");
    CHECK_THROWS_AS(parse_text(broken), ParseError);
  }
  SUBCASE("bad split value") {
    std::string broken = text;
    broken.replace(broken.find("train"), 5, "extra");
    CHECK_THROWS_AS(parse_text(broken), ParseError);
  }
  SUBCASE("non-positive resolution") {
    std::string broken = text;
    broken.replace(broken.find("0.2"), 3, "0.0");
    CHECK_THROWS_AS(parse_text(broken), ParseError);
  }
  SUBCASE("absolute path") {
    std::string broken = text;
    broken.replace(broken.find("masks/x_t.png"), 13, "/abs/x_t.png!");
    CHECK_THROWS_AS(parse_text(broken), ParseError);
  }
  SUBCASE("malformed date") {
    DatasetManifest dated;
    PairRecord r = sample_record("d");
    r.date_t = "June 2018";
    dated.records.push_back(r);
    CHECK_THROWS_AS(parse_text(serialize_manifest(dated)), ParseError);
  }
}

TEST_CASE("manifest files remember their location for path resolution") {
  const fs::path dir = fs::temp_directory_path() / "tempweak_manifest_tests";
  fs::create_directories(dir);
  DatasetManifest manifest;
  manifest.records.push_back(sample_record("loc"));
  const fs::path path = dir / "manifest.jsonl";
  write_manifest(manifest, path);
  const DatasetManifest loaded = parse_manifest(path);
  CHECK(loaded == manifest);
  CHECK(loaded.base_dir == dir);
  CHECK(loaded.resolve(loaded.records[0].mask_t) ==
        dir / "masks/loc_t.png");
}

TEST_CASE("missing manifest files are I/O errors") {
  CHECK_THROWS_AS(parse_manifest("no/such/manifest.jsonl"), IoError);
}
