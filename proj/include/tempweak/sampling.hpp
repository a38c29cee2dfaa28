#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tempweak/changemap.hpp"
#include "tempweak/manifest.hpp"
#include "tempweak/raster.hpp"

namespace tempweak {

// Real slots present one record as an unchanged pair; fake slots pair the
// date-t imagery of record_t with the date-t2 imagery of record_t2.
struct BatchSlot {
  enum class Kind { real, fake };

  Kind kind = Kind::real;
  std::string record_t;
  std::string record_t2;

  bool operator==(const BatchSlot&) const = default;
};

struct BatchPlan {
  std::uint64_t seed = 0;
  std::uint64_t batch_index = 0;
  int n_real = 0;
  int n_fake = 0;
  std::vector<BatchSlot> slots;

  bool operator==(const BatchPlan&) const = default;
};

// Training targets for one slot: the mask pair presented to the model and
// the change mask supervising it.
struct TargetTriplet {
  SemanticMask mask_t;
  SemanticMask mask_t2;
  ChangeMask change;
};

// Splits a batch of size batch_size into floor(batch_size * p_real) real
// slots and the remainder fake slots, drawing train records and the fake
// pairing permutation from a generator keyed by (seed, batch_index). The
// pairing is a derangement, so a batch with exactly one fake slot is
// rejected as infeasible.
BatchPlan plan_batch(const DatasetManifest& manifest, int batch_size,
                     double p_real, std::uint64_t seed,
                     std::uint64_t batch_index);

// Real slots yield an identical mask pair with an all-zero change mask; fake
// slots yield the two records' date-t masks with their comparison map, the
// date-t mask of record_t2 standing in for its unavailable date-t2 truth.
TargetTriplet synthesize_targets(
    const BatchSlot& slot, const std::map<std::string, SemanticMask>& masks,
    const SIoUParams& params);

std::string serialize_plan(const BatchPlan& plan);

}  // namespace tempweak
