#pragma once

#include <filesystem>
#include <vector>

#include "tempweak/raster.hpp"

namespace tempweak {

struct TileOrigin {
  int row = 0;
  int col = 0;

  bool operator==(const TileOrigin&) const = default;
};

// Separable tile grid: origins are the cross product of the per-axis origin
// lists, enumerated row-major.
struct TileGrid {
  int width = 0;
  int height = 0;
  int tile_size = 0;
  int overlap = 0;
  std::vector<int> row_origins;
  std::vector<int> col_origins;
  std::vector<TileOrigin> origins;

  std::size_t tile_count() const { return origins.size(); }

  bool operator==(const TileGrid&) const = default;
};

// Origins advance by stride = tile_size - overlap from 0; the final origin
// per axis is clamped to dimension - tile_size, duplicates removed. Every
// pixel is covered by at least one tile.
TileGrid plan_grid(int width, int height, int tile_size, int overlap);

std::vector<ChangeMask> extract_tiles(const ChangeMask& raster,
                                      const TileGrid& grid);
std::vector<SemanticMask> extract_tiles(const SemanticMask& raster,
                                        const TileGrid& grid);

// Reassembles tiles into the full raster. Within overlaps each pixel takes
// its value from the tile whose center is nearest, ties going to the lowest
// tile index, so stitching extracted tiles reproduces the original raster.
ChangeMask stitch(const std::vector<ChangeMask>& tiles, const TileGrid& grid);

void write_grid(const TileGrid& grid, const std::filesystem::path& path);
TileGrid read_grid(const std::filesystem::path& path);

}  // namespace tempweak
