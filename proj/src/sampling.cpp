#include "tempweak/sampling.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "tempweak/rng.hpp"

namespace tempweak {

namespace {

// floor(batch_size * p_real) with products within 1e-9 of an integer snapped
// to it, so decimal proportions like 0.35 land on their intended counts.
int real_slot_count(int batch_size, double p_real) {
  const double product = static_cast<double>(batch_size) * p_real;
  int n = static_cast<int>(std::floor(product));
  if (product - n > 1.0 - 1e-9) ++n;
  return n;
}

template <typename T>
void shuffle(std::vector<T>& values, CounterRng& rng) {
  for (std::size_t i = values.size(); i > 1; --i)
    std::swap(values[i - 1], values[rng.next_below(i)]);
}

std::vector<std::size_t> derangement(std::size_t n, CounterRng& rng) {
  std::vector<std::size_t> perm(n);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    shuffle(perm, rng);
    bool fixed_point = false;
    for (std::size_t i = 0; i < n; ++i)
      if (perm[i] == i) {
        fixed_point = true;
        break;
      }
    if (!fixed_point) return perm;
  }
  throw Error("derangement sampling did not converge");
}

}  // namespace

BatchPlan plan_batch(const DatasetManifest& manifest, int batch_size,
                     double p_real, std::uint64_t seed,
                     std::uint64_t batch_index) {
  if (batch_size < 1) throw ArgumentError("batch size must be positive");
  if (!(p_real >= 0.0 && p_real <= 1.0))
    throw ArgumentError("p_real must lie in [0, 1]");

  std::vector<const PairRecord*> train;
  for (const PairRecord& r : manifest.records)
    if (r.split == Split::train) train.push_back(&r);
  if (train.size() < static_cast<std::size_t>(batch_size))
    throw InsufficientDataError(
        "batch size " + std::to_string(batch_size) + " exceeds the " +
        std::to_string(train.size()) + " train records available");

  BatchPlan plan;
  plan.seed = seed;
  plan.batch_index = batch_index;
  plan.n_real = real_slot_count(batch_size, p_real);
  plan.n_fake = batch_size - plan.n_real;
  if (plan.n_fake == 1)
    throw InfeasibleDerangementError(
        "a single fake slot admits no fixed-point-free pairing; use a batch "
        "composition with zero or at least two fake slots");

  CounterRng rng(seed, batch_index);
  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Partial Fisher-Yates: positions [0, batch_size) become the draw.
  for (std::size_t i = 0; i < static_cast<std::size_t>(batch_size); ++i) {
    const std::size_t j = i + rng.next_below(order.size() - i);
    std::swap(order[i], order[j]);
  }

  plan.slots.reserve(static_cast<std::size_t>(batch_size));
  for (int i = 0; i < plan.n_real; ++i) {
    const std::string& id = train[order[static_cast<std::size_t>(i)]]->id;
    plan.slots.push_back({BatchSlot::Kind::real, id, id});
  }
  if (plan.n_fake > 0) {
    const std::size_t base = static_cast<std::size_t>(plan.n_real);
    const std::vector<std::size_t> pairing =
        derangement(static_cast<std::size_t>(plan.n_fake), rng);
    for (std::size_t i = 0; i < pairing.size(); ++i) {
      plan.slots.push_back({BatchSlot::Kind::fake,
                            train[order[base + i]]->id,
                            train[order[base + pairing[i]]]->id});
    }
  }
  return plan;
}

TargetTriplet synthesize_targets(
    const BatchSlot& slot, const std::map<std::string, SemanticMask>& masks,
    const SIoUParams& params) {
  auto lookup = [&masks](const std::string& id) -> const SemanticMask& {
    auto it = masks.find(id);
    if (it == masks.end()) throw IoError("missing mask for record '" + id + "'");
    return it->second;
  };
  const SemanticMask& first = lookup(slot.record_t);
  if (slot.kind == BatchSlot::Kind::real) {
    TargetTriplet t{first, first, make_change_mask(first.width, first.height)};
    return t;
  }
  const SemanticMask& second = lookup(slot.record_t2);
  return {first, second, siou_changemap(first, second, params)};
}

std::string serialize_plan(const BatchPlan& plan) {
  std::ostringstream out;
  for (std::size_t i = 0; i < plan.slots.size(); ++i) {
    const BatchSlot& slot = plan.slots[i];
    out << plan.batch_index << ' ' << i << ' ';
    if (slot.kind == BatchSlot::Kind::real)
      out << "real " << slot.record_t;
    else
      out << "fake " << slot.record_t << ' ' << slot.record_t2;
    out << '\n';
  }
  return out.str();
}

}  // namespace tempweak
