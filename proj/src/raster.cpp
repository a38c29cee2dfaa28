#include "tempweak/raster.hpp"

#include <array>

namespace tempweak {

namespace {

constexpr int kMaxClasses = 256;

void check_geometry(int width, int height) {
  if (width <= 0 || height <= 0)
    throw ArgumentError("mask dimensions must be positive");
}

}  // namespace

SemanticMask make_mask(int width, int height, int class_count,
                       std::uint8_t background_class,
                       std::optional<double> resolution) {
  check_geometry(width, height);
  if (class_count < 1 || class_count > kMaxClasses)
    throw ArgumentError("class count must be in [1, 256]");
  if (background_class >= class_count)
    throw InvalidClassError("background class out of range");
  if (resolution && *resolution <= 0.0)
    throw ArgumentError("resolution must be positive");
  SemanticMask m;
  m.width = width;
  m.height = height;
  m.class_count = class_count;
  m.background_class = background_class;
  m.resolution = resolution;
  m.data.assign(static_cast<std::size_t>(width) * height, background_class);
  return m;
}

ChangeMask make_change_mask(int width, int height) {
  check_geometry(width, height);
  ChangeMask m;
  m.width = width;
  m.height = height;
  m.data.assign(static_cast<std::size_t>(width) * height, 0);
  return m;
}

SemanticMask merge_classes(const SemanticMask& mask,
                           const std::vector<std::uint8_t>& foreground) {
  if (foreground.empty())
    throw ArgumentError("foreground class set must not be empty");
  std::array<bool, kMaxClasses> in_foreground{};
  for (std::uint8_t c : foreground) {
    if (c >= mask.class_count)
      throw InvalidClassError("foreground class " + std::to_string(c) +
                              " out of range for " +
                              std::to_string(mask.class_count) + " classes");
    if (c == mask.background_class)
      throw ArgumentError("foreground must not contain the background class");
    in_foreground[c] = true;
  }
  SemanticMask out = make_mask(mask.width, mask.height, 2, 0, mask.resolution);
  for (std::size_t i = 0; i < mask.data.size(); ++i)
    out.data[i] = in_foreground[mask.data[i]] ? 1 : 0;
  return out;
}

SemanticMask nn_resample(const SemanticMask& mask, int factor) {
  if (factor < 1) throw ArgumentError("resample factor must be positive");
  if (mask.width % factor != 0 || mask.height % factor != 0)
    throw ArgumentError("mask dimensions must divide by the resample factor");
  SemanticMask out =
      make_mask(mask.width / factor, mask.height / factor, mask.class_count,
                mask.background_class,
                mask.resolution ? std::optional<double>(*mask.resolution *
                                                        factor)
                                : std::nullopt);
  const int off = factor / 2;
  for (int y = 0; y < out.height; ++y)
    for (int x = 0; x < out.width; ++x)
      out.at(y, x) = mask.at(y * factor + off, x * factor + off);
  return out;
}

ValidationReport validate(const SemanticMask& mask) {
  ValidationReport report;
  auto add = [&report](std::string kind, std::string message, int row = -1,
                       int col = -1) {
    report.findings.push_back(
        {std::move(kind), std::move(message), row, col});
  };
  if (mask.width <= 0 || mask.height <= 0)
    add("dimensions", "width and height must be positive");
  if (mask.class_count < 1 || mask.class_count > kMaxClasses)
    add("class_count", "class count must be in [1, 256]");
  else if (mask.background_class >= mask.class_count)
    add("background", "background class " +
                          std::to_string(mask.background_class) +
                          " not below class count " +
                          std::to_string(mask.class_count));
  const std::size_t expected =
      mask.width > 0 && mask.height > 0
          ? static_cast<std::size_t>(mask.width) * mask.height
          : 0;
  if (mask.data.size() != expected) {
    add("dimensions", "pixel buffer holds " + std::to_string(mask.data.size()) +
                          " values, expected " + std::to_string(expected));
  } else if (mask.class_count >= 1 && mask.class_count <= kMaxClasses) {
    for (int y = 0; y < mask.height; ++y) {
      for (int x = 0; x < mask.width; ++x) {
        const std::uint8_t v = mask.at(y, x);
        if (v >= mask.class_count)
          add("pixel", "class " + std::to_string(v) + " out of range", y, x);
      }
    }
  }
  if (mask.resolution && *mask.resolution <= 0.0)
    add("resolution", "resolution must be positive");
  return report;
}

}  // namespace tempweak
