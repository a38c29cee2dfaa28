#include "tempweak/components.hpp"

#include <array>
#include <numeric>

namespace tempweak {

namespace {

// Union-find over provisional labels from the first scan pass.
class LabelForest {
 public:
  int make() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

ComponentSet label_grid(int width, int height,
                        const std::vector<std::uint8_t>& data,
                        const std::array<bool, 256>& wanted,
                        int connectivity) {
  if (connectivity != 4 && connectivity != 8)
    throw ArgumentError("connectivity must be 4 or 8");

  const int none = -1;
  std::vector<int> labels(data.size(), none);
  LabelForest forest;

  auto idx = [width](int r, int c) {
    return static_cast<std::size_t>(r) * width + c;
  };

  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const std::uint8_t v = data[idx(r, c)];
      if (!wanted[v]) continue;
      int label = none;
      auto adopt = [&](int rr, int cc) {
        if (rr < 0 || cc < 0 || cc >= width) return;
        if (data[idx(rr, cc)] != v) return;
        const int other = labels[idx(rr, cc)];
        if (other == none) return;
        if (label == none)
          label = other;
        else
          forest.merge(label, other);
      };
      adopt(r, c - 1);
      adopt(r - 1, c);
      if (connectivity == 8) {
        adopt(r - 1, c - 1);
        adopt(r - 1, c + 1);
      }
      if (label == none) label = forest.make();
      labels[idx(r, c)] = label;
    }
  }

  ComponentSet set;
  set.width = width;
  set.height = height;
  std::vector<int> slot_of_root;
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const int label = labels[idx(r, c)];
      if (label == none) continue;
      const int root = forest.find(label);
      if (static_cast<std::size_t>(root) >= slot_of_root.size())
        slot_of_root.resize(static_cast<std::size_t>(root) + 1, none);
      int slot = slot_of_root[static_cast<std::size_t>(root)];
      if (slot == none) {
        slot = static_cast<int>(set.components.size());
        slot_of_root[static_cast<std::size_t>(root)] = slot;
        Component comp;
        comp.class_id = data[idx(r, c)];
        comp.bbox = {r, c, r, c};
        set.components.push_back(std::move(comp));
      }
      Component& comp = set.components[static_cast<std::size_t>(slot)];
      comp.pixels.push_back({r, c});
      comp.bbox.min_row = std::min(comp.bbox.min_row, r);
      comp.bbox.min_col = std::min(comp.bbox.min_col, c);
      comp.bbox.max_row = std::max(comp.bbox.max_row, r);
      comp.bbox.max_col = std::max(comp.bbox.max_col, c);
    }
  }
  return set;
}

}  // namespace

ComponentSet label_components(const SemanticMask& mask,
                              const std::vector<std::uint8_t>& classes,
                              int connectivity) {
  if (classes.empty())
    throw ArgumentError("class set must not be empty");
  std::array<bool, 256> wanted{};
  for (std::uint8_t c : classes) {
    if (c >= mask.class_count)
      throw InvalidClassError("class " + std::to_string(c) +
                              " out of range for " +
                              std::to_string(mask.class_count) + " classes");
    wanted[c] = true;
  }
  return label_grid(mask.width, mask.height, mask.data, wanted, connectivity);
}

ComponentSet label_components(const ChangeMask& mask, int connectivity) {
  std::array<bool, 256> wanted{};
  wanted[1] = true;
  return label_grid(mask.width, mask.height, mask.data, wanted, connectivity);
}

ObjectStats component_stats(const ComponentSet& components, double resolution) {
  if (!(resolution > 0.0))
    throw ArgumentError("resolution must be positive");
  ObjectStats stats;
  stats.count = components.components.size();
  if (stats.count == 0) return stats;
  std::size_t total = 0;
  for (const Component& c : components.components) total += c.area_px();
  stats.mean_area_px =
      static_cast<double>(total) / static_cast<double>(stats.count);
  stats.mean_area_m2 = stats.mean_area_px * resolution * resolution;
  return stats;
}

}  // namespace tempweak
