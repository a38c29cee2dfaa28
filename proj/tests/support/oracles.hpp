#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tempweak/raster.hpp"

// Slow reference implementations kept deliberately independent of the
// library's algorithms: set arithmetic instead of label maps, sorting
// instead of counting, queue flood fill instead of union-find.
namespace oracle {

using PixelSet = std::set<std::pair<int, int>>;

struct FloodComponent {
  std::uint8_t class_id = 0;
  PixelSet pixels;
};

std::vector<FloodComponent> flood_fill_components(
    const tempweak::SemanticMask& mask, const std::vector<std::uint8_t>& classes,
    int connectivity);

// Score of every flood-fill component of `from_mask` against `other_mask`,
// straight from the set definitions.
double siou_score(const FloodComponent& c,
                  const std::vector<FloodComponent>& same_mask,
                  const std::vector<FloodComponent>& other_mask);

tempweak::ChangeMask siou_changemap(const tempweak::SemanticMask& s1,
                                    const tempweak::SemanticMask& s2,
                                    double tau,
                                    const std::vector<std::uint8_t>& classes,
                                    int connectivity);

tempweak::ChangeMask median_filter_sorting(const tempweak::ChangeMask& mask,
                                           int window);

// Random binary mask of at most max_blobs axis-aligned rectangles.
tempweak::SemanticMask random_binary_mask(std::mt19937_64& rng, int width,
                                          int height, int max_blobs);

tempweak::ChangeMask random_change_mask(std::mt19937_64& rng, int width,
                                        int height, double density);

// Readable fixtures: one character per pixel, '0'..'9' class indices.
tempweak::SemanticMask mask_from_art(const std::vector<std::string>& rows,
                                     int class_count);
tempweak::ChangeMask change_from_art(const std::vector<std::string>& rows);

}  // namespace oracle
