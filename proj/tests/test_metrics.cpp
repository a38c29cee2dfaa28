#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tempweak/metrics.hpp"

using namespace tempweak;

TEST_CASE("a worked 4x4 confusion has exact rational scores") {
  const ChangeMask pred = oracle::change_from_art({"1100",
                                                   "0100",
                                                   "0000",
                                                   "0000"});
  const ChangeMask ref = oracle::change_from_art({"1000",
                                                  "0110",
                                                  "0000",
                                                  "0000"});
  ConfusionCounts counts;
  accumulate(counts, pred, ref);
  CHECK((counts == ConfusionCounts{2, 1, 1, 12}));
  CHECK(counts.total() == 16);
  CHECK(f1(counts) == 4.0 / 6.0);
  CHECK(f1(counts) == 2.0 / 3.0);
  CHECK(iou(counts) == 2.0 / 4.0);
  CHECK(fpr(counts) == 1.0 / 13.0);
}

TEST_CASE("accumulation sums counters across pairs") {
  const ChangeMask a = oracle::change_from_art({"10", "01"});
  const ChangeMask b = oracle::change_from_art({"11", "00"});
  ConfusionCounts counts;
  accumulate(counts, a, b);
  accumulate(counts, a, b);
  CHECK((counts == ConfusionCounts{2, 2, 2, 2}));

  ConfusionCounts merged;
  ConfusionCounts once;
  accumulate(once, a, b);
  merged += once;
  merged += once;
  CHECK(merged == counts);
}

TEST_CASE("ratios degrade to 0 instead of dividing by zero") {
  CHECK(f1(ConfusionCounts{0, 0, 0, 16}) == 0.0);
  CHECK(iou(ConfusionCounts{0, 0, 0, 16}) == 0.0);
  CHECK(fpr(ConfusionCounts{0, 0, 4, 0}) == 0.0);
  CHECK(f1(ConfusionCounts{}) == 0.0);
}

TEST_CASE("f1 and iou are tied by the standard identity") {
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<std::uint64_t> d(0, 5000);
  for (int trial = 0; trial < 10000; ++trial) {
    const ConfusionCounts counts{d(rng), d(rng), d(rng), d(rng)};
    const double i = iou(counts);
    CHECK(f1(counts) == doctest::Approx(2.0 * i / (1.0 + i)).epsilon(1e-12));
  }
}

TEST_CASE("a perfect prediction scores 1 everywhere it should") {
  std::mt19937_64 rng(1234);
  const ChangeMask mask = oracle::random_change_mask(rng, 64, 48, 0.3);
  ConfusionCounts counts;
  accumulate(counts, mask, mask);
  CHECK(counts.fp == 0);
  CHECK(counts.fn == 0);
  CHECK(f1(counts) == 1.0);
  CHECK(iou(counts) == 1.0);
  CHECK(fpr(counts) == 0.0);
}

TEST_CASE("accumulate rejects mismatched geometries") {
  ConfusionCounts counts;
  const ChangeMask a = make_change_mask(4, 4);
  const ChangeMask b = make_change_mask(4, 5);
  CHECK_THROWS_AS(accumulate(counts, a, b), ShapeError);
}

TEST_CASE("the median filter removes isolated pixels and keeps blocks") {
  ChangeMask mask = make_change_mask(11, 11);
  mask.at(5, 5) = 1;
  CHECK(median_filter(mask) == make_change_mask(11, 11));

  ChangeMask block = make_change_mask(11, 11);
  for (int r = 2; r <= 8; ++r)
    for (int c = 2; c <= 8; ++c) block.at(r, c) = 1;
  const ChangeMask smoothed = median_filter(block);
  CHECK(smoothed.at(5, 5) == 1);
  CHECK(smoothed.at(0, 0) == 0);
}

TEST_CASE("constant masks are fixed points of the median filter") {
  ChangeMask ones = make_change_mask(9, 7);
  for (auto& v : ones.data) v = 1;
  CHECK(median_filter(ones) == ones);
  const ChangeMask zeros = make_change_mask(9, 7);
  CHECK(median_filter(zeros) == zeros);
}

TEST_CASE("an even split in a clipped window resolves to 0") {
  // At (1, 0) the clipped 5x5 window holds 4x3 = 12 pixels; filling one
  // 2x3 corner plus a 3-pixel column makes exactly 6 ones, a tie.
  ChangeMask mask = make_change_mask(8, 8);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) mask.at(r, c) = 1;
  mask.at(2, 0) = 1;
  mask.at(2, 1) = 1;
  mask.at(3, 0) = 1;
  REQUIRE([&] {
    int ones = 0;
    for (int r = 0; r <= 3; ++r)
      for (int c = 0; c <= 2; ++c) ones += mask.at(r, c);
    return ones;
  }() == 9);
  mask.at(0, 0) = 0;
  mask.at(1, 1) = 0;
  mask.at(2, 1) = 0;
  CHECK(median_filter(mask).at(1, 0) == 0);
  mask.at(0, 0) = 1;
  CHECK(median_filter(mask).at(1, 0) == 1);
}

TEST_CASE("the majority vote equals the sorted lower median") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    const ChangeMask mask = oracle::random_change_mask(rng, 21, 17, 0.45);
    for (int window : {3, 5, 7}) {
      CHECK(median_filter(mask, window) ==
            oracle::median_filter_sorting(mask, window));
    }
  }
}

TEST_CASE("window sizes must be odd and positive") {
  const ChangeMask mask = make_change_mask(6, 6);
  CHECK_THROWS_AS(median_filter(mask, 4), ArgumentError);
  CHECK_THROWS_AS(median_filter(mask, 0), ArgumentError);
  CHECK_THROWS_AS(median_filter(mask, -5), ArgumentError);
  CHECK(median_filter(mask, 1) == mask);
}

TEST_CASE("object reports count components and convert areas") {
  ChangeMask mask = make_change_mask(30, 20);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 5; ++c) {
      mask.at(r, c) = 1;
      mask.at(r + 10, c + 8) = 1;
      mask.at(r + 16, c + 20) = 1;
    }
  const ObjectStats stats = object_report(mask, 0.2);
  CHECK(stats.count == 3);
  CHECK(stats.mean_area_px == 10.0);
  CHECK(stats.mean_area_m2 == doctest::Approx(0.4).epsilon(1e-12));

  const ObjectStats empty = object_report(make_change_mask(8, 8), 0.2);
  CHECK(empty.count == 0);
  CHECK(empty.mean_area_px == 0.0);
}
