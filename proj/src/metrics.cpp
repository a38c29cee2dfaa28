#include "tempweak/metrics.hpp"

#include <algorithm>

namespace tempweak {

ConfusionCounts& accumulate(ConfusionCounts& counts, const ChangeMask& pred,
                            const ChangeMask& ref) {
  if (pred.width != ref.width || pred.height != ref.height)
    throw ShapeError("prediction and reference dimensions differ");
  for (std::size_t i = 0; i < pred.data.size(); ++i) {
    const bool p = pred.data[i] != 0;
    const bool r = ref.data[i] != 0;
    if (p && r)
      ++counts.tp;
    else if (p && !r)
      ++counts.fp;
    else if (!p && r)
      ++counts.fn;
    else
      ++counts.tn;
  }
  return counts;
}

double f1(const ConfusionCounts& c) {
  const std::uint64_t den = 2 * c.tp + c.fp + c.fn;
  return den == 0 ? 0.0
                  : static_cast<double>(2 * c.tp) / static_cast<double>(den);
}

double iou(const ConfusionCounts& c) {
  const std::uint64_t den = c.tp + c.fp + c.fn;
  return den == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(den);
}

double fpr(const ConfusionCounts& c) {
  const std::uint64_t den = c.fp + c.tn;
  return den == 0 ? 0.0 : static_cast<double>(c.fp) / static_cast<double>(den);
}

ChangeMask median_filter(const ChangeMask& mask, int window) {
  if (window < 1 || window % 2 == 0)
    throw ArgumentError("median window must be odd and positive");
  const int radius = window / 2;
  ChangeMask out = make_change_mask(mask.width, mask.height);
  for (int r = 0; r < mask.height; ++r) {
    const int r0 = std::max(0, r - radius);
    const int r1 = std::min(mask.height - 1, r + radius);
    for (int c = 0; c < mask.width; ++c) {
      const int c0 = std::max(0, c - radius);
      const int c1 = std::min(mask.width - 1, c + radius);
      int ones = 0;
      for (int rr = r0; rr <= r1; ++rr)
        for (int cc = c0; cc <= c1; ++cc) ones += mask.at(rr, cc);
      const int valid = (r1 - r0 + 1) * (c1 - c0 + 1);
      out.at(r, c) = 2 * ones > valid ? 1 : 0;
    }
  }
  return out;
}

ObjectStats object_report(const ChangeMask& mask, double resolution,
                          int connectivity) {
  return component_stats(label_components(mask, connectivity), resolution);
}

}  // namespace tempweak
