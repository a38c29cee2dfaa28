#pragma once

#include <filesystem>

#include "tempweak/raster.hpp"

namespace tempweak {

// 8-bit single-channel PNG carrying class indices. The PNG stores no class
// table or resolution; callers supply class_count (and resolution via the
// manifest).
SemanticMask read_mask_png(const std::filesystem::path& path, int class_count,
                           std::optional<double> resolution = std::nullopt);
void write_mask_png(const std::filesystem::path& path,
                    const SemanticMask& mask);

// 8-bit single-channel PNG with 0 = unchanged and 255 = changed; any other
// pixel value is rejected.
ChangeMask read_change_png(const std::filesystem::path& path);
void write_change_png(const std::filesystem::path& path,
                      const ChangeMask& mask);

}  // namespace tempweak
