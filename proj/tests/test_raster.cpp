#include "doctest.h"
#include "support/oracles.hpp"
#include "tempweak/raster.hpp"

using namespace tempweak;

TEST_CASE("merge_classes collapses the foreground set to class 1") {
  SemanticMask mask = oracle::mask_from_art({"0120",
                                             "2110",
                                             "0003"}, 4);
  const SemanticMask merged = merge_classes(mask, {1, 2});
  CHECK(merged.class_count == 2);
  CHECK(merged.background_class == 0);
  CHECK(merged.width == mask.width);
  CHECK(merged.height == mask.height);
  for (int r = 0; r < mask.height; ++r)
    for (int c = 0; c < mask.width; ++c) {
      const bool fg = mask.at(r, c) == 1 || mask.at(r, c) == 2;
      CHECK(merged.at(r, c) == (fg ? 1 : 0));
    }
}

TEST_CASE("merge_classes on an already binary mask is the identity") {
  SemanticMask mask = oracle::mask_from_art({"010", "110"}, 2);
  mask.resolution = 0.2;
  const SemanticMask merged = merge_classes(mask, {1});
  CHECK(merged == mask);
}

TEST_CASE("merge_classes preserves resolution and foreground pixel count") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    SemanticMask mask = make_mask(17, 13, 19, 0, 0.2);
    std::uniform_int_distribution<int> cls(0, 18);
    for (auto& v : mask.data) v = static_cast<std::uint8_t>(cls(rng));
    const std::vector<std::uint8_t> fg = {3, 7, 11};
    const SemanticMask merged = merge_classes(mask, fg);
    CHECK(merged.resolution == mask.resolution);
    std::size_t expected = 0;
    for (auto v : mask.data)
      expected += (v == 3 || v == 7 || v == 11) ? 1 : 0;
    std::size_t actual = 0;
    for (auto v : merged.data) actual += v;
    CHECK(actual == expected);
  }
}

TEST_CASE("merge_classes rejects bad foreground sets") {
  const SemanticMask mask = oracle::mask_from_art({"01", "10"}, 2);
  CHECK_THROWS_AS(merge_classes(mask, {}), ArgumentError);
  CHECK_THROWS_AS(merge_classes(mask, {2}), InvalidClassError);
  CHECK_THROWS_AS(merge_classes(mask, {0}), ArgumentError);
}

TEST_CASE("nn_resample samples cell centers and scales resolution") {
  SemanticMask mask = make_mask(4, 4, 5, 0, 0.2);
  // Quadrants of distinct classes; factor 2 keeps one pixel per quadrant.
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      mask.at(r, c) = static_cast<std::uint8_t>(1 + (r / 2) * 2 + (c / 2));
  const SemanticMask small = nn_resample(mask, 2);
  CHECK(small.width == 2);
  CHECK(small.height == 2);
  CHECK(small.at(0, 0) == 1);
  CHECK(small.at(0, 1) == 2);
  CHECK(small.at(1, 0) == 3);
  CHECK(small.at(1, 1) == 4);
  REQUIRE(small.resolution.has_value());
  CHECK(*small.resolution == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("nn_resample by 8 maps 512px 0.2m masks to 64px 1.6m") {
  SemanticMask mask = make_mask(512, 512, 2, 0, 0.2);
  mask.at(4, 4) = 1;  // center of the first 8x8 cell
  const SemanticMask small = nn_resample(mask, 8);
  CHECK(small.width == 64);
  CHECK(small.height == 64);
  CHECK(small.at(0, 0) == 1);
  CHECK(*small.resolution == doctest::Approx(1.6).epsilon(1e-12));
}

TEST_CASE("nn_resample factor 1 is the identity") {
  std::mt19937_64 rng(7);
  const SemanticMask mask = oracle::random_binary_mask(rng, 12, 9, 4);
  CHECK(nn_resample(mask, 1) == mask);
}

TEST_CASE("nn_resample validates the factor") {
  const SemanticMask mask = make_mask(12, 12, 2);
  CHECK_THROWS_AS(nn_resample(mask, 5), ArgumentError);
  CHECK_THROWS_AS(nn_resample(mask, 0), ArgumentError);
  CHECK_THROWS_AS(nn_resample(mask, -2), ArgumentError);
}

TEST_CASE("composed resampling matches the combined factor on cell-constant masks") {
  SemanticMask mask = make_mask(24, 24, 3, 0, 0.5);
  for (int r = 0; r < 24; ++r)
    for (int c = 0; c < 24; ++c)
      mask.at(r, c) = static_cast<std::uint8_t>(((r / 6) + (c / 6)) % 3);
  const SemanticMask once = nn_resample(mask, 6);
  const SemanticMask twice = nn_resample(nn_resample(mask, 2), 3);
  CHECK(once.width == twice.width);
  CHECK(once.data == twice.data);
  CHECK(*once.resolution == doctest::Approx(*twice.resolution).epsilon(1e-12));
}

TEST_CASE("validate accepts a well-formed mask") {
  const SemanticMask mask = oracle::mask_from_art({"010", "101"}, 2);
  CHECK(validate(mask).ok());
}

TEST_CASE("validate reports out-of-range pixels with coordinates") {
  SemanticMask mask = make_mask(3, 2, 2);
  mask.at(1, 2) = 5;
  const ValidationReport report = validate(mask);
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].kind == "pixel");
  CHECK(report.findings[0].row == 1);
  CHECK(report.findings[0].col == 2);
}

TEST_CASE("validate reports structural defects") {
  SemanticMask mask = make_mask(3, 3, 2, 0, 0.2);
  mask.data.pop_back();
  CHECK(!validate(mask).ok());

  SemanticMask negative_res = make_mask(3, 3, 2);
  negative_res.resolution = -0.5;
  const ValidationReport report = validate(negative_res);
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].kind == "resolution");

  SemanticMask bad_background = make_mask(3, 3, 2);
  bad_background.background_class = 9;
  CHECK(!validate(bad_background).ok());
}

TEST_CASE("mask constructors enforce their invariants") {
  CHECK_THROWS_AS(make_mask(0, 4, 2), ArgumentError);
  CHECK_THROWS_AS(make_mask(4, 4, 0), ArgumentError);
  CHECK_THROWS_AS(make_mask(4, 4, 2, 2), InvalidClassError);
  CHECK_THROWS_AS(make_mask(4, 4, 2, 0, -1.0), ArgumentError);
  CHECK_THROWS_AS(make_change_mask(4, -1), ArgumentError);
}
