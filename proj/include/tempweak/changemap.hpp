#pragma once

#include <cstdint>
#include <vector>

#include "tempweak/components.hpp"
#include "tempweak/raster.hpp"

namespace tempweak {

struct SIoUParams {
  double tau = 0.25;
  std::vector<std::uint8_t> classes_of_interest = {1};
  int connectivity = 8;
};

// Semantic IoU of component c against the other date's mask: the overlap
// with same-class components of the other mask, over the union of c and
// those components minus every other same-class component of c's own mask.
// A component with no same-class overlap in the other mask scores 0.
double siou_of_component(const Component& c, const ComponentSet& same_mask,
                         const ComponentSet& other_mask);

// Scores every component of `from` against `against` in enumeration order.
std::vector<double> siou_scores(const ComponentSet& from,
                                const ComponentSet& against);

// Marks every pixel belonging to a component (of either mask) whose score
// is strictly below tau. tau = 0 therefore yields an all-zero map.
ChangeMask siou_changemap(const SemanticMask& s1, const SemanticMask& s2,
                          const SIoUParams& params);

// Pixelwise comparison baselines over membership in classes_of_interest.
ChangeMask xor_changemap(const SemanticMask& s1, const SemanticMask& s2,
                         const std::vector<std::uint8_t>& classes_of_interest);
ChangeMask or_changemap(const SemanticMask& s1, const SemanticMask& s2,
                        const std::vector<std::uint8_t>& classes_of_interest);

// Change from a pair of independently predicted semantic masks; this is the
// post-classification comparison baseline.
ChangeMask postclass_changemap(
    const SemanticMask& pred1, const SemanticMask& pred2,
    const std::vector<std::uint8_t>& classes_of_interest);

}  // namespace tempweak
