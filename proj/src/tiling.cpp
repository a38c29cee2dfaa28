#include "tempweak/tiling.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tempweak {

namespace {

std::vector<int> plan_axis(int dim, int tile_size, int stride) {
  std::vector<int> origins;
  for (int pos = 0; pos <= dim - tile_size; pos += stride)
    origins.push_back(pos);
  if (origins.back() != dim - tile_size) origins.push_back(dim - tile_size);
  return origins;
}

// Index of the origin whose tile center is nearest to each coordinate, ties
// to the lower index. Centers sit at origin + (tile_size - 1) / 2, compared
// at doubled scale to stay in integers.
std::vector<int> nearest_origin(const std::vector<int>& origins, int dim,
                                int tile_size) {
  std::vector<int> nearest(static_cast<std::size_t>(dim));
  std::size_t idx = 0;
  for (int x = 0; x < dim; ++x) {
    auto dist = [&](std::size_t i) {
      return std::abs(2 * x - (2 * origins[i] + tile_size - 1));
    };
    while (idx + 1 < origins.size() && dist(idx + 1) < dist(idx)) ++idx;
    nearest[static_cast<std::size_t>(x)] = static_cast<int>(idx);
  }
  return nearest;
}

template <typename Raster>
std::vector<Raster> extract_impl(const Raster& raster, const TileGrid& grid,
                                 Raster tile_template) {
  if (raster.width != grid.width || raster.height != grid.height)
    throw ShapeError("raster dimensions do not match the grid");
  std::vector<Raster> tiles;
  tiles.reserve(grid.origins.size());
  for (const TileOrigin& origin : grid.origins) {
    Raster tile = tile_template;
    for (int r = 0; r < grid.tile_size; ++r)
      for (int c = 0; c < grid.tile_size; ++c)
        tile.at(r, c) = raster.at(origin.row + r, origin.col + c);
    tiles.push_back(std::move(tile));
  }
  return tiles;
}

}  // namespace

TileGrid plan_grid(int width, int height, int tile_size, int overlap) {
  if (width < 1 || height < 1)
    throw ArgumentError("raster dimensions must be positive");
  if (tile_size < 1) throw ArgumentError("tile size must be positive");
  if (tile_size > width || tile_size > height)
    throw ArgumentError("tile size " + std::to_string(tile_size) +
                        " exceeds raster dimensions " + std::to_string(width) +
                        "x" + std::to_string(height));
  if (overlap < 0 || overlap >= tile_size)
    throw ArgumentError("overlap must lie in [0, tile size)");

  TileGrid grid;
  grid.width = width;
  grid.height = height;
  grid.tile_size = tile_size;
  grid.overlap = overlap;
  const int stride = tile_size - overlap;
  grid.row_origins = plan_axis(height, tile_size, stride);
  grid.col_origins = plan_axis(width, tile_size, stride);
  grid.origins.reserve(grid.row_origins.size() * grid.col_origins.size());
  for (int r : grid.row_origins)
    for (int c : grid.col_origins) grid.origins.push_back({r, c});
  return grid;
}

std::vector<ChangeMask> extract_tiles(const ChangeMask& raster,
                                      const TileGrid& grid) {
  return extract_impl(raster, grid,
                      make_change_mask(grid.tile_size, grid.tile_size));
}

std::vector<SemanticMask> extract_tiles(const SemanticMask& raster,
                                        const TileGrid& grid) {
  SemanticMask tile =
      make_mask(grid.tile_size, grid.tile_size, raster.class_count,
                raster.background_class, raster.resolution);
  return extract_impl(raster, grid, std::move(tile));
}

ChangeMask stitch(const std::vector<ChangeMask>& tiles, const TileGrid& grid) {
  if (tiles.size() != grid.origins.size())
    throw ShapeError("tile count " + std::to_string(tiles.size()) +
                     " does not match the grid's " +
                     std::to_string(grid.origins.size()));
  for (const ChangeMask& tile : tiles)
    if (tile.width != grid.tile_size || tile.height != grid.tile_size)
      throw ShapeError("tile dimensions do not match the grid tile size");

  const std::vector<int> row_pick =
      nearest_origin(grid.row_origins, grid.height, grid.tile_size);
  const std::vector<int> col_pick =
      nearest_origin(grid.col_origins, grid.width, grid.tile_size);
  const int cols = static_cast<int>(grid.col_origins.size());

  ChangeMask out = make_change_mask(grid.width, grid.height);
  for (int r = 0; r < grid.height; ++r) {
    for (int c = 0; c < grid.width; ++c) {
      const int tile_idx = row_pick[static_cast<std::size_t>(r)] * cols +
                           col_pick[static_cast<std::size_t>(c)];
      const TileOrigin& origin =
          grid.origins[static_cast<std::size_t>(tile_idx)];
      out.at(r, c) = tiles[static_cast<std::size_t>(tile_idx)].at(
          r - origin.row, c - origin.col);
    }
  }
  return out;
}

void write_grid(const TileGrid& grid, const std::filesystem::path& path) {
  using Json = nlohmann::ordered_json;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  Json header;
  header["width"] = grid.width;
  header["height"] = grid.height;
  header["tile_size"] = grid.tile_size;
  header["overlap"] = grid.overlap;
  out << header.dump() << '\n';
  for (const TileOrigin& origin : grid.origins)
    out << origin.row << ' ' << origin.col << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

TileGrid read_grid(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line))
    throw ParseError(path.string() + ": missing grid header");
  int width = 0, height = 0, tile_size = 0, overlap = 0;
  try {
    const auto header = nlohmann::json::parse(line);
    width = header.at("width").get<int>();
    height = header.at("height").get<int>();
    tile_size = header.at("tile_size").get<int>();
    overlap = header.at("overlap").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": line 1: " + e.what());
  }
  TileGrid grid = plan_grid(width, height, tile_size, overlap);

  std::size_t line_no = 1;
  std::vector<TileOrigin> listed;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() && in.eof()) continue;
    std::istringstream fields(line);
    TileOrigin origin;
    if (!(fields >> origin.row >> origin.col))
      throw ParseError(path.string() + ": line " + std::to_string(line_no) +
                       ": expected 'row col'");
    listed.push_back(origin);
  }
  if (listed != grid.origins)
    throw ParseError(path.string() +
                     ": listed origins do not match the header geometry");
  return grid;
}

}  // namespace tempweak
