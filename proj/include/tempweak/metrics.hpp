#pragma once

#include <cstdint>

#include "tempweak/components.hpp"
#include "tempweak/raster.hpp"

namespace tempweak {

// Micro-accumulated pixel confusion counters; class 1 is positive.
struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    tn += o.tn;
    return *this;
  }
  std::uint64_t total() const { return tp + fp + fn + tn; }

  bool operator==(const ConfusionCounts&) const = default;
};

ConfusionCounts& accumulate(ConfusionCounts& counts, const ChangeMask& pred,
                            const ChangeMask& ref);

// Each ratio is 0 when its denominator is 0.
double f1(const ConfusionCounts& counts);
double iou(const ConfusionCounts& counts);
double fpr(const ConfusionCounts& counts);

// Majority vote over the window clipped to the image; border windows count
// only valid pixels, and even-count ties resolve to 0. window must be odd.
ChangeMask median_filter(const ChangeMask& mask, int window = 5);

// Connected-component statistics of the predicted change objects.
ObjectStats object_report(const ChangeMask& mask, double resolution,
                          int connectivity = 8);

}  // namespace tempweak
