#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tempweak/errors.hpp"

namespace tempweak {

// Single-date semantic mask: row-major class indices, one byte per pixel.
// class_count (K) bounds every pixel value; background_class < K.
struct SemanticMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;
  int class_count = 0;
  std::uint8_t background_class = 0;
  std::optional<double> resolution;  // meters per pixel

  std::uint8_t at(int row, int col) const {
    return data[static_cast<std::size_t>(row) * width + col];
  }
  std::uint8_t& at(int row, int col) {
    return data[static_cast<std::size_t>(row) * width + col];
  }
  std::size_t pixel_count() const { return data.size(); }

  bool operator==(const SemanticMask&) const = default;
};

// Binary change mask, values in {0, 1}.
struct ChangeMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  std::uint8_t at(int row, int col) const {
    return data[static_cast<std::size_t>(row) * width + col];
  }
  std::uint8_t& at(int row, int col) {
    return data[static_cast<std::size_t>(row) * width + col];
  }
  std::size_t pixel_count() const { return data.size(); }

  bool operator==(const ChangeMask&) const = default;
};

SemanticMask make_mask(int width, int height, int class_count,
                       std::uint8_t background_class = 0,
                       std::optional<double> resolution = std::nullopt);

ChangeMask make_change_mask(int width, int height);

// One problem found by validate(); coordinates are set for pixel findings.
struct ValidationFinding {
  std::string kind;
  std::string message;
  int row = -1;
  int col = -1;
};

struct ValidationReport {
  std::vector<ValidationFinding> findings;
  bool ok() const { return findings.empty(); }
};

// Collapses the classes in `foreground` to class 1 and everything else to
// class 0. The result is a binary mask (K = 2, background 0) with the input
// geometry and resolution.
SemanticMask merge_classes(const SemanticMask& mask,
                           const std::vector<std::uint8_t>& foreground);

// Nearest-neighbour downsampling by an integer factor; both dimensions must
// divide evenly. Samples the center pixel of each factor x factor cell and
// scales resolution by the factor.
SemanticMask nn_resample(const SemanticMask& mask, int factor);

// Reports every structural defect instead of stopping at the first one.
ValidationReport validate(const SemanticMask& mask);

}  // namespace tempweak
