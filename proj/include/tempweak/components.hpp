#pragma once

#include <cstdint>
#include <vector>

#include "tempweak/raster.hpp"

namespace tempweak {

struct Pixel {
  int row = 0;
  int col = 0;

  bool operator==(const Pixel&) const = default;
  bool operator<(const Pixel& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

struct BoundingBox {
  int min_row = 0;
  int min_col = 0;
  int max_row = 0;
  int max_col = 0;

  bool operator==(const BoundingBox&) const = default;
};

// Maximal connected set of equal-class pixels. Pixels are sorted row-major;
// the first pixel identifies the component within its mask.
struct Component {
  std::uint8_t class_id = 0;
  std::vector<Pixel> pixels;
  BoundingBox bbox;

  std::size_t area_px() const { return pixels.size(); }
  const Pixel& first_pixel() const { return pixels.front(); }

  bool operator==(const Component&) const = default;
};

struct ComponentSet {
  int width = 0;
  int height = 0;
  std::vector<Component> components;
};

struct ObjectStats {
  std::size_t count = 0;
  double mean_area_px = 0.0;
  double mean_area_m2 = 0.0;
};

// Labels maximal components of the requested classes, 8-connected by default
// (4 also supported). Components are enumerated row-major by first pixel.
ComponentSet label_components(const SemanticMask& mask,
                              const std::vector<std::uint8_t>& classes,
                              int connectivity = 8);

// Same labeling over the 1-pixels of a binary change map.
ComponentSet label_components(const ChangeMask& mask, int connectivity = 8);

// resolution is meters per pixel; mean_area_m2 = mean_area_px * resolution^2.
ObjectStats component_stats(const ComponentSet& components, double resolution);

}  // namespace tempweak
