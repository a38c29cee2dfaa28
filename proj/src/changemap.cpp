#include "tempweak/changemap.hpp"

#include <array>
#include <unordered_map>

namespace tempweak {

namespace {

void check_pair_geometry(const SemanticMask& s1, const SemanticMask& s2) {
  if (s1.width != s2.width || s1.height != s2.height)
    throw ShapeError("mask pair dimensions differ");
}

std::array<bool, 256> membership(const SemanticMask& s1,
                                 const SemanticMask& s2,
                                 const std::vector<std::uint8_t>& classes) {
  if (classes.empty())
    throw ArgumentError("classes of interest must not be empty");
  std::array<bool, 256> wanted{};
  for (std::uint8_t c : classes) {
    if (c >= s1.class_count || c >= s2.class_count)
      throw InvalidClassError("class " + std::to_string(c) +
                              " out of range for the mask pair");
    if (c == s1.background_class || c == s2.background_class)
      throw ArgumentError("classes of interest must exclude the background");
    wanted[c] = true;
  }
  return wanted;
}

std::vector<int> label_map(const ComponentSet& set) {
  std::vector<int> map(static_cast<std::size_t>(set.width) * set.height, -1);
  for (std::size_t i = 0; i < set.components.size(); ++i)
    for (const Pixel& p : set.components[i].pixels)
      map[static_cast<std::size_t>(p.row) * set.width + p.col] =
          static_cast<int>(i);
  return map;
}

}  // namespace

std::vector<double> siou_scores(const ComponentSet& from,
                                const ComponentSet& against) {
  if (from.width != against.width || from.height != against.height)
    throw ShapeError("component sets cover different geometries");
  const std::vector<int> against_label = label_map(against);

  // coverage[j]: pixels of against-component j lying inside any same-class
  // component of `from`; the per-pair overlaps fill intersections.
  std::vector<std::size_t> coverage(against.components.size(), 0);
  std::vector<std::unordered_map<int, std::size_t>> intersections(
      from.components.size());
  for (std::size_t i = 0; i < from.components.size(); ++i) {
    const Component& c = from.components[i];
    for (const Pixel& p : c.pixels) {
      const int j =
          against_label[static_cast<std::size_t>(p.row) * from.width + p.col];
      if (j < 0) continue;
      if (against.components[static_cast<std::size_t>(j)].class_id !=
          c.class_id)
        continue;
      ++intersections[i][j];
      ++coverage[static_cast<std::size_t>(j)];
    }
  }

  std::vector<double> scores(from.components.size(), 0.0);
  for (std::size_t i = 0; i < from.components.size(); ++i) {
    if (intersections[i].empty()) continue;
    std::size_t overlap = 0;
    std::size_t denominator = from.components[i].area_px();
    for (const auto& [j, count] : intersections[i]) {
      overlap += count;
      // Other same-class components of `from` carve their footprint out of
      // the union, leaving |c_j'| - coverage[j] + count foreign pixels.
      denominator += against.components[static_cast<std::size_t>(j)].area_px() -
                     coverage[static_cast<std::size_t>(j)] + count;
    }
    denominator -= overlap;
    scores[i] = static_cast<double>(overlap) / static_cast<double>(denominator);
  }
  return scores;
}

double siou_of_component(const Component& c, const ComponentSet& same_mask,
                         const ComponentSet& other_mask) {
  for (std::size_t i = 0; i < same_mask.components.size(); ++i) {
    if (same_mask.components[i] == c)
      return siou_scores(same_mask, other_mask)[i];
  }
  throw ArgumentError("component does not belong to the given mask");
}

ChangeMask siou_changemap(const SemanticMask& s1, const SemanticMask& s2,
                          const SIoUParams& params) {
  check_pair_geometry(s1, s2);
  if (s1.class_count != s2.class_count)
    throw ShapeError("mask pair class counts differ");
  if (!(params.tau >= 0.0 && params.tau <= 1.0))
    throw ArgumentError("tau must lie in [0, 1]");
  membership(s1, s2, params.classes_of_interest);

  const ComponentSet c1 =
      label_components(s1, params.classes_of_interest, params.connectivity);
  const ComponentSet c2 =
      label_components(s2, params.classes_of_interest, params.connectivity);

  ChangeMask out = make_change_mask(s1.width, s1.height);
  auto paint = [&out, &params](const ComponentSet& set,
                               const std::vector<double>& scores) {
    for (std::size_t i = 0; i < set.components.size(); ++i) {
      if (!(scores[i] < params.tau)) continue;
      for (const Pixel& p : set.components[i].pixels) out.at(p.row, p.col) = 1;
    }
  };
  paint(c1, siou_scores(c1, c2));
  paint(c2, siou_scores(c2, c1));
  return out;
}

ChangeMask xor_changemap(const SemanticMask& s1, const SemanticMask& s2,
                         const std::vector<std::uint8_t>& classes_of_interest) {
  check_pair_geometry(s1, s2);
  const std::array<bool, 256> wanted = membership(s1, s2, classes_of_interest);
  ChangeMask out = make_change_mask(s1.width, s1.height);
  for (std::size_t i = 0; i < out.data.size(); ++i)
    out.data[i] = wanted[s1.data[i]] != wanted[s2.data[i]] ? 1 : 0;
  return out;
}

ChangeMask or_changemap(const SemanticMask& s1, const SemanticMask& s2,
                        const std::vector<std::uint8_t>& classes_of_interest) {
  check_pair_geometry(s1, s2);
  const std::array<bool, 256> wanted = membership(s1, s2, classes_of_interest);
  ChangeMask out = make_change_mask(s1.width, s1.height);
  for (std::size_t i = 0; i < out.data.size(); ++i)
    out.data[i] = wanted[s1.data[i]] || wanted[s2.data[i]] ? 1 : 0;
  return out;
}

ChangeMask postclass_changemap(
    const SemanticMask& pred1, const SemanticMask& pred2,
    const std::vector<std::uint8_t>& classes_of_interest) {
  return xor_changemap(pred1, pred2, classes_of_interest);
}

}  // namespace tempweak
