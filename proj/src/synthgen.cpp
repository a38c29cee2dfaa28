#include "tempweak/synthgen.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "tempweak/png_io.hpp"
#include "tempweak/rng.hpp"

namespace tempweak {

namespace {

struct Blob {
  int row = 0;
  int col = 0;
  int height = 0;
  int width = 0;
  // Notched quadrant carved out of the rectangle: -1 none, else 0..3 for
  // top-left, top-right, bottom-left, bottom-right.
  int notch = -1;
};

Blob roll_blob(CounterRng& rng, const SynthSpec& spec) {
  Blob b;
  b.height = spec.blob_side_min +
             static_cast<int>(rng.next_below(
                 static_cast<std::uint64_t>(spec.blob_side_max -
                                            spec.blob_side_min + 1)));
  b.width = spec.blob_side_min +
            static_cast<int>(rng.next_below(
                static_cast<std::uint64_t>(spec.blob_side_max -
                                           spec.blob_side_min + 1)));
  const int row_room = spec.size - b.height - 2 * spec.jitter;
  const int col_room = spec.size - b.width - 2 * spec.jitter;
  b.row = spec.jitter +
          static_cast<int>(rng.next_below(static_cast<std::uint64_t>(row_room + 1)));
  b.col = spec.jitter +
          static_cast<int>(rng.next_below(static_cast<std::uint64_t>(col_room + 1)));
  if (rng.next_below(3) == 0)
    b.notch = static_cast<int>(rng.next_below(4));
  return b;
}

void paint_blob(SemanticMask& mask, const Blob& b, int dr, int dc) {
  const int notch_rows = b.height / 2;
  const int notch_cols = b.width / 2;
  for (int r = 0; r < b.height; ++r) {
    for (int c = 0; c < b.width; ++c) {
      if (b.notch >= 0) {
        const bool top = r < notch_rows;
        const bool left = c < notch_cols;
        const int quadrant = (top ? 0 : 2) + (left ? 0 : 1);
        if (quadrant == b.notch) continue;
      }
      const int rr = b.row + dr + r;
      const int cc = b.col + dc + c;
      if (rr < 0 || cc < 0 || rr >= mask.height || cc >= mask.width) continue;
      mask.at(rr, cc) = 1;
    }
  }
}

std::uint8_t shade(std::uint64_t key, int r, int c, bool building, int lift) {
  CounterRng noise(key, (static_cast<std::uint64_t>(r) << 32) |
                            static_cast<std::uint64_t>(c));
  const int base = building ? 168 : 92;
  return static_cast<std::uint8_t>(base + lift + noise.next_below(24));
}

SemanticMask render_image(const SemanticMask& mask, std::uint64_t key,
                          int lift) {
  SemanticMask image = make_mask(mask.width, mask.height, 256, 0);
  for (int r = 0; r < mask.height; ++r)
    for (int c = 0; c < mask.width; ++c)
      image.at(r, c) = shade(key, r, c, mask.at(r, c) == 1, lift);
  return image;
}

std::string pair_id(int index) {
  std::string digits = std::to_string(index);
  return "pair_" + std::string(6 - std::min<std::size_t>(6, digits.size()), '0') +
         digits;
}

}  // namespace

DatasetManifest generate_dataset(const SynthSpec& spec,
                                 const std::filesystem::path& out_dir) {
  if (spec.pair_count < 1) throw ArgumentError("pair count must be positive");
  if (spec.size < 16) throw ArgumentError("size must be at least 16");
  if (spec.jitter < 0) throw ArgumentError("jitter must be non-negative");
  if (spec.blob_side_min < 2 || spec.blob_side_min > spec.blob_side_max)
    throw ArgumentError("blob side range is invalid");
  if (spec.blob_count_min < 0 || spec.blob_count_min > spec.blob_count_max)
    throw ArgumentError("blob count range is invalid");
  if (!(spec.change_rate >= 0.0 && spec.change_rate <= 1.0))
    throw ArgumentError("change rate must lie in [0, 1]");
  if (!(spec.resolution > 0.0))
    throw ArgumentError("resolution must be positive");
  if (spec.blob_side_max + 2 * spec.jitter >= spec.size)
    throw ArgumentError("blobs with jitter margin do not fit the raster");

  std::error_code ec;
  std::filesystem::create_directories(out_dir / "images", ec);
  std::filesystem::create_directories(out_dir / "masks", ec);
  if (!std::filesystem::is_directory(out_dir / "images") ||
      !std::filesystem::is_directory(out_dir / "masks"))
    throw IoError("cannot create dataset directories under " +
                  out_dir.string());

  const long long changed_total = static_cast<long long>(
      static_cast<double>(spec.pair_count) * spec.change_rate);

  DatasetManifest manifest;
  for (int i = 0; i < spec.pair_count; ++i) {
    CounterRng rng(spec.seed, static_cast<std::uint64_t>(i));
    // Even Bresenham spread of exactly changed_total changed pairs.
    const bool changed =
        (static_cast<long long>(i + 1) * changed_total) / spec.pair_count >
        (static_cast<long long>(i) * changed_total) / spec.pair_count;

    SemanticMask mask_t =
        make_mask(spec.size, spec.size, 2, 0, spec.resolution);
    SemanticMask mask_t2 = mask_t;

    const int blob_count =
        spec.blob_count_min +
        static_cast<int>(rng.next_below(static_cast<std::uint64_t>(
            spec.blob_count_max - spec.blob_count_min + 1)));
    for (int b = 0; b < blob_count; ++b) {
      const Blob blob = roll_blob(rng, spec);
      int dr = 0, dc = 0;
      if (spec.jitter > 0) {
        dr = static_cast<int>(rng.next_below(
                 static_cast<std::uint64_t>(2 * spec.jitter + 1))) -
             spec.jitter;
        dc = static_cast<int>(rng.next_below(
                 static_cast<std::uint64_t>(2 * spec.jitter + 1))) -
             spec.jitter;
      }
      paint_blob(mask_t, blob, 0, 0);
      paint_blob(mask_t2, blob, dr, dc);
    }
    if (changed) {
      const Blob blob = roll_blob(rng, spec);
      if (rng.next_below(2) == 0)
        paint_blob(mask_t2, blob, 0, 0);  // construction
      else
        paint_blob(mask_t, blob, 0, 0);  // demolition
    }

    const std::string id = pair_id(i);
    PairRecord record;
    record.id = id;
    record.image_t = "images/" + id + "_t.png";
    record.image_t2 = "images/" + id + "_t2.png";
    record.mask_t = "masks/" + id + "_t.png";
    record.mask_t2 = "masks/" + id + "_t2.png";
    record.split = Split::train;
    record.resolution = spec.resolution;
    record.date_t = "2018-06-0" + std::to_string(1 + i % 9);
    record.date_t2 = "2021-06-0" + std::to_string(1 + i % 9);

    const std::uint64_t image_key =
        spec.seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(i) + 1));
    write_mask_png(out_dir / record.mask_t, mask_t);
    write_mask_png(out_dir / *record.mask_t2, mask_t2);
    write_mask_png(out_dir / record.image_t, render_image(mask_t, image_key, 0));
    write_mask_png(out_dir / record.image_t2,
                   render_image(mask_t2, image_key, 8));
    manifest.records.push_back(std::move(record));
  }

  write_manifest(manifest, out_dir / "manifest.jsonl");
  manifest.base_dir = out_dir;
  manifest.source_path = (out_dir / "manifest.jsonl").string();
  return manifest;
}

}  // namespace tempweak
