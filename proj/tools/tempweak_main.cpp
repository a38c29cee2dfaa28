#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tempweak/changemap.hpp"
#include "tempweak/manifest.hpp"
#include "tempweak/metrics.hpp"
#include "tempweak/parallel.hpp"
#include "tempweak/png_io.hpp"
#include "tempweak/raster.hpp"
#include "tempweak/refinement.hpp"
#include "tempweak/sampling.hpp"
#include "tempweak/synthgen.hpp"
#include "tempweak/tiling.hpp"

namespace fs = std::filesystem;
using namespace tempweak;
using Json = nlohmann::ordered_json;

namespace {

int resolve_threads(int flag_value) {
  if (flag_value != 0) {
    if (flag_value < 1) throw ArgumentError("--threads must be positive");
    return flag_value;
  }
  if (const char* env = std::getenv("TEMPWEAK_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1)
      throw ArgumentError(std::string("TEMPWEAK_THREADS is not a positive "
                                      "integer: '") +
                          env + "'");
    return static_cast<int>(value);
  }
  return 1;
}

std::vector<std::uint8_t> to_classes(const std::vector<int>& raw) {
  std::vector<std::uint8_t> classes;
  for (int c : raw) {
    if (c < 0 || c > 255)
      throw ArgumentError("class index " + std::to_string(c) +
                          " outside [0, 255]");
    classes.push_back(static_cast<std::uint8_t>(c));
  }
  return classes;
}

double percent(double ratio) { return std::round(ratio * 1000.0) / 10.0; }

std::string fixed1(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.1f", value);
  return buffer;
}

void ensure_parent(const fs::path& path) {
  const fs::path parent = path.parent_path();
  if (!parent.empty()) fs::create_directories(parent);
}

void write_text(const fs::path& path, const std::string& text) {
  ensure_parent(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

// ---------------------------------------------------------------- changemap

struct ChangemapArgs {
  std::string manifest;
  std::string out_dir;
  std::string mode = "siou";
  double tau = 0.25;
  std::vector<int> classes = {1};
  int class_count = 2;
  int connectivity = 8;
  int threads = 0;
};

int run_changemap(const ChangemapArgs& args) {
  const DatasetManifest manifest = parse_manifest(args.manifest);
  const std::vector<std::uint8_t> classes = to_classes(args.classes);
  SIoUParams params;
  params.tau = args.tau;
  params.classes_of_interest = classes;
  params.connectivity = args.connectivity;

  fs::create_directories(args.out_dir);
  const int threads = resolve_threads(args.threads);
  parallel_for(manifest.records.size(), threads, [&](std::size_t i) {
    const PairRecord& record = manifest.records[i];
    if (!record.mask_t2)
      throw ArgumentError("record '" + record.id +
                          "' has no mask_t2; a mask pair is required to "
                          "compute a change map");
    const SemanticMask s1 = read_mask_png(manifest.resolve(record.mask_t),
                                          args.class_count, record.resolution);
    const SemanticMask s2 = read_mask_png(manifest.resolve(*record.mask_t2),
                                          args.class_count, record.resolution);
    ChangeMask change;
    if (args.mode == "siou")
      change = siou_changemap(s1, s2, params);
    else if (args.mode == "xor")
      change = xor_changemap(s1, s2, classes);
    else if (args.mode == "or")
      change = or_changemap(s1, s2, classes);
    else if (args.mode == "postclass")
      change = postclass_changemap(s1, s2, classes);
    else
      throw ArgumentError("unknown mode '" + args.mode + "'");
    write_change_png(fs::path(args.out_dir) / (record.id + "_change.png"),
                     change);
  });
  std::cout << "wrote " << manifest.records.size() << " change maps to "
            << args.out_dir << "\n";
  return 0;
}

// ---------------------------------------------------------------- batch-plan

struct BatchPlanArgs {
  std::string manifest;
  int batch_size = 0;
  double p_real = 0.25;
  std::uint64_t seed = 0;
  int batches = 1;
  std::string out;
  int threads = 0;
};

int run_batch_plan(const BatchPlanArgs& args) {
  if (args.batches < 1) throw ArgumentError("--batches must be positive");
  const DatasetManifest manifest = parse_manifest(args.manifest);
  const int threads = resolve_threads(args.threads);
  std::vector<std::string> chunks(static_cast<std::size_t>(args.batches));
  parallel_for(chunks.size(), threads, [&](std::size_t i) {
    chunks[i] = serialize_plan(
        plan_batch(manifest, args.batch_size, args.p_real, args.seed, i));
  });
  std::string text;
  for (const std::string& chunk : chunks) text += chunk;
  if (args.out.empty())
    std::cout << text;
  else
    write_text(args.out, text);
  return 0;
}

// -------------------------------------------------------------------- refine

struct RefineArgs {
  std::string manifest;
  std::string pred_dir;
  double threshold = 0.02;
  std::string out;
  std::string report;
};

// Re-expresses a path that was relative to from_dir as relative to to_dir.
std::string rebase(const std::string& path, const fs::path& from_dir,
                   const fs::path& to_dir) {
  const fs::path absolute =
      fs::absolute(from_dir / path).lexically_normal();
  const fs::path base = fs::absolute(to_dir).lexically_normal();
  const fs::path rebased = absolute.lexically_relative(base);
  return rebased.empty() ? absolute.string() : rebased.generic_string();
}

int run_refine(const RefineArgs& args) {
  const DatasetManifest manifest = parse_manifest(args.manifest);
  std::map<std::string, ChangeMask> predictions;
  for (const PairRecord& record : manifest.records) {
    if (record.split != Split::train) continue;
    const fs::path path = fs::path(args.pred_dir) / (record.id + "_change.png");
    if (!fs::exists(path))
      throw IoError("no prediction for train record '" + record.id + "': " +
                    path.string());
    predictions.emplace(record.id, read_change_png(path));
  }
  RefinementResult result =
      filter_manifest(manifest, predictions, args.threshold, args.manifest);

  // The output may land in a different directory than the input; paths stay
  // relative to the manifest that carries them.
  auto dir_or_dot = [](const fs::path& p) {
    return p.empty() ? fs::path(".") : p;
  };
  const fs::path in_dir = dir_or_dot(manifest.base_dir);
  const fs::path out_dir = dir_or_dot(fs::path(args.out).parent_path());
  if (fs::absolute(in_dir).lexically_normal() !=
      fs::absolute(out_dir).lexically_normal()) {
    result.manifest.parent = rebase(result.manifest.parent, fs::path("."),
                                    out_dir);
    for (PairRecord& record : result.manifest.records) {
      record.image_t = rebase(record.image_t, in_dir, out_dir);
      record.image_t2 = rebase(record.image_t2, in_dir, out_dir);
      record.mask_t = rebase(record.mask_t, in_dir, out_dir);
      if (record.mask_t2) record.mask_t2 = rebase(*record.mask_t2, in_dir, out_dir);
      if (record.pred_change)
        record.pred_change = rebase(*record.pred_change, in_dir, out_dir);
    }
  }
  ensure_parent(args.out);
  write_manifest(result.manifest, args.out);
  if (!args.report.empty())
    write_text(args.report, serialize_report(result.report));
  std::cout << "kept " << result.report.kept.size() << " of "
            << manifest.records.size() << " records\n";
  return 0;
}

// ------------------------------------------------------------------ evaluate

struct EvaluateArgs {
  std::string pred_dir;
  std::string ref_dir;
  std::string manifest;
  std::string out;
  double resolution = 1.0;
  bool median = false;
  int window = 5;
  bool pretty = false;
};

struct PairEntry {
  std::string id;
  fs::path pred;
  fs::path ref;
  double resolution = 1.0;
};

std::vector<PairEntry> collect_pairs(const EvaluateArgs& args) {
  std::vector<PairEntry> pairs;
  const std::string suffix = "_change.png";
  if (!args.manifest.empty()) {
    const DatasetManifest manifest = parse_manifest(args.manifest);
    for (const PairRecord& record : manifest.records)
      pairs.push_back({record.id,
                       fs::path(args.pred_dir) / (record.id + suffix),
                       fs::path(args.ref_dir) / (record.id + suffix),
                       record.resolution});
  } else {
    if (!fs::is_directory(args.pred_dir))
      throw IoError("prediction directory not found: " + args.pred_dir);
    std::set<std::string> ids;
    for (const auto& entry : fs::directory_iterator(args.pred_dir)) {
      const std::string name = entry.path().filename().string();
      if (name.size() > suffix.size() &&
          name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
        ids.insert(name.substr(0, name.size() - suffix.size()));
    }
    for (const std::string& id : ids)
      pairs.push_back({id, fs::path(args.pred_dir) / (id + suffix),
                       fs::path(args.ref_dir) / (id + suffix),
                       args.resolution});
  }
  if (pairs.empty()) throw ArgumentError("no prediction files to evaluate");
  return pairs;
}

struct VariantTotals {
  ConfusionCounts counts;
  std::size_t objects = 0;
  std::size_t object_px = 0;
  double object_m2 = 0.0;
};

Json pair_line(const std::string& id, const std::string& variant,
               const ConfusionCounts& counts, const ObjectStats& stats) {
  Json line;
  line["scope"] = "pair";
  line["id"] = id;
  line["variant"] = variant;
  line["f1_pct"] = percent(f1(counts));
  line["iou_pct"] = percent(iou(counts));
  line["fpr_pct"] = percent(fpr(counts));
  line["tp"] = counts.tp;
  line["fp"] = counts.fp;
  line["fn"] = counts.fn;
  line["tn"] = counts.tn;
  line["objects"] = stats.count;
  line["mean_object_px"] = stats.mean_area_px;
  line["mean_object_m2"] = stats.mean_area_m2;
  return line;
}

int run_evaluate(const EvaluateArgs& args) {
  const std::vector<PairEntry> pairs = collect_pairs(args);
  std::vector<std::string> variants = {"raw"};
  if (args.median) variants.push_back("filtered");

  std::map<std::string, VariantTotals> totals;
  std::vector<Json> lines;
  for (const PairEntry& pair : pairs) {
    if (!fs::exists(pair.pred))
      throw IoError("missing prediction " + pair.pred.string());
    if (!fs::exists(pair.ref))
      throw IoError("missing reference " + pair.ref.string());
    const ChangeMask ref = read_change_png(pair.ref);
    ChangeMask pred = read_change_png(pair.pred);
    for (const std::string& variant : variants) {
      if (variant == "filtered") pred = median_filter(pred, args.window);
      ConfusionCounts counts;
      accumulate(counts, pred, ref);
      const ObjectStats stats = object_report(pred, pair.resolution);
      lines.push_back(pair_line(pair.id, variant, counts, stats));
      VariantTotals& t = totals[variant];
      t.counts += counts;
      t.objects += stats.count;
      t.object_px += static_cast<std::size_t>(
          stats.mean_area_px * static_cast<double>(stats.count) + 0.5);
      t.object_m2 += stats.mean_area_m2 * static_cast<double>(stats.count);
    }
  }

  std::ostringstream report;
  Json header;
  header["kind"] = "evaluation";
  header["pairs"] = pairs.size();
  header["median_window"] = args.median ? Json(args.window) : Json(nullptr);
  report << header.dump() << '\n';
  for (const Json& line : lines) report << line.dump() << '\n';
  for (const std::string& variant : variants) {
    const VariantTotals& t = totals[variant];
    Json line;
    line["scope"] = "global";
    line["variant"] = variant;
    line["f1_pct"] = percent(f1(t.counts));
    line["iou_pct"] = percent(iou(t.counts));
    line["fpr_pct"] = percent(fpr(t.counts));
    line["tp"] = t.counts.tp;
    line["fp"] = t.counts.fp;
    line["fn"] = t.counts.fn;
    line["tn"] = t.counts.tn;
    line["objects_per_pair"] =
        static_cast<double>(t.objects) / static_cast<double>(pairs.size());
    line["mean_object_px"] =
        t.objects == 0 ? 0.0
                       : static_cast<double>(t.object_px) /
                             static_cast<double>(t.objects);
    line["mean_object_m2"] =
        t.objects == 0 ? 0.0 : t.object_m2 / static_cast<double>(t.objects);
    report << line.dump() << '\n';
  }

  if (!args.out.empty()) write_text(args.out, report.str());
  if (args.pretty) {
    std::cout << "variant    F1     IoU    FPR    obj/pair  mean-obj-m2\n";
    for (const std::string& variant : variants) {
      const VariantTotals& t = totals[variant];
      std::cout << variant << (variant == "raw" ? "      " : " ")
                << fixed1(percent(f1(t.counts))) << "   "
                << fixed1(percent(iou(t.counts))) << "   "
                << fixed1(percent(fpr(t.counts))) << "    "
                << (static_cast<double>(t.objects) /
                    static_cast<double>(pairs.size()))
                << "       "
                << (t.objects == 0 ? 0.0
                                   : t.object_m2 / static_cast<double>(t.objects))
                << "\n";
    }
  } else if (args.out.empty()) {
    std::cout << report.str();
  }
  return 0;
}

// ---------------------------------------------------------------- tile/stitch

struct TileArgs {
  std::string input;
  int width = 0;
  int height = 0;
  int size = 256;
  int overlap = 6;
  std::string grid;
  std::string out_dir;
};

std::string tile_name(std::size_t index) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "tile_%05zu.png", index);
  return buffer;
}

int run_tile(const TileArgs& args) {
  int width = args.width;
  int height = args.height;
  std::optional<SemanticMask> raster;
  if (!args.input.empty()) {
    raster = read_mask_png(args.input, 256);
    width = raster->width;
    height = raster->height;
  } else if (width < 1 || height < 1) {
    throw ArgumentError("either --input or both --width and --height are "
                        "required");
  }
  const TileGrid grid = plan_grid(width, height, args.size, args.overlap);
  ensure_parent(args.grid);
  write_grid(grid, args.grid);
  if (raster) {
    if (args.out_dir.empty())
      throw ArgumentError("--out-dir is required when extracting tiles");
    fs::create_directories(args.out_dir);
    const std::vector<SemanticMask> tiles = extract_tiles(*raster, grid);
    for (std::size_t i = 0; i < tiles.size(); ++i)
      write_mask_png(fs::path(args.out_dir) / tile_name(i), tiles[i]);
  }
  std::cout << grid.tile_count() << " tiles (" << grid.row_origins.size()
            << " x " << grid.col_origins.size() << ")\n";
  return 0;
}

struct StitchArgs {
  std::string grid;
  std::string tiles_dir;
  std::string out;
};

int run_stitch(const StitchArgs& args) {
  const TileGrid grid = read_grid(args.grid);
  std::vector<ChangeMask> tiles;
  tiles.reserve(grid.tile_count());
  for (std::size_t i = 0; i < grid.tile_count(); ++i) {
    const fs::path path = fs::path(args.tiles_dir) / tile_name(i);
    if (!fs::exists(path)) throw IoError("missing tile " + path.string());
    tiles.push_back(read_change_png(path));
  }
  ensure_parent(args.out);
  write_change_png(args.out, stitch(tiles, grid));
  std::cout << "stitched " << grid.tile_count() << " tiles into " << args.out
            << "\n";
  return 0;
}

// ------------------------------------------------- merge-classes / resample

struct MergeArgs {
  std::string input;
  std::string out;
  std::vector<int> foreground;
  int class_count = 0;  // 0 = infer from the data and foreground set
};

int run_merge_classes(const MergeArgs& args) {
  const std::vector<std::uint8_t> foreground = to_classes(args.foreground);
  SemanticMask mask = read_mask_png(args.input, 256);
  if (args.class_count != 0) {
    if (args.class_count < 1 || args.class_count > 256)
      throw ArgumentError("--class-count must lie in [1, 256]");
    for (std::uint8_t v : mask.data)
      if (v >= args.class_count)
        throw ParseError(args.input + ": class " + std::to_string(v) +
                         " out of range for " +
                         std::to_string(args.class_count) + " classes");
    mask.class_count = args.class_count;
  } else {
    int max_value = 1;
    for (std::uint8_t v : mask.data) max_value = std::max<int>(max_value, v);
    for (std::uint8_t c : foreground) max_value = std::max<int>(max_value, c);
    mask.class_count = max_value + 1;
  }
  ensure_parent(args.out);
  write_mask_png(args.out, merge_classes(mask, foreground));
  return 0;
}

struct ResampleArgs {
  std::string input;
  std::string out;
  int factor = 0;
};

int run_resample(const ResampleArgs& args) {
  const SemanticMask mask = read_mask_png(args.input, 256);
  ensure_parent(args.out);
  write_mask_png(args.out, nn_resample(mask, args.factor));
  return 0;
}

// ------------------------------------------------------------------ validate

struct ValidateArgs {
  std::string input;
  std::string manifest;
  int class_count = 256;
  double resolution = 0.0;
};

int run_validate(const ValidateArgs& args) {
  if (!args.manifest.empty()) {
    const DatasetManifest manifest = parse_manifest(args.manifest);
    std::cout << "ok: " << manifest.records.size() << " records, iteration "
              << manifest.iteration << "\n";
    return 0;
  }
  SemanticMask mask = read_mask_png(args.input, 256);
  mask.class_count = args.class_count;
  if (args.resolution != 0.0) mask.resolution = args.resolution;
  const ValidationReport report = validate(mask);
  if (report.ok()) {
    std::cout << "ok\n";
    return 0;
  }
  for (const ValidationFinding& finding : report.findings) {
    std::cout << finding.kind << ": " << finding.message;
    if (finding.row >= 0)
      std::cout << " at (" << finding.row << ", " << finding.col << ")";
    std::cout << "\n";
  }
  return 1;
}

// --------------------------------------------------------------------- synth

struct SynthArgs {
  std::uint64_t seed = 0;
  int pairs = 64;
  int size = 64;
  double change_rate = 0.1;
  int jitter = 1;
  std::vector<int> blob_count = {1, 4};
  std::vector<int> blob_size = {6, 14};
  double resolution = 0.2;
  std::string out;
};

int run_synth(const SynthArgs& args) {
  if (args.blob_count.size() != 2 || args.blob_size.size() != 2)
    throw ArgumentError("--blob-count and --blob-size take two values: "
                        "min max");
  SynthSpec spec;
  spec.seed = args.seed;
  spec.pair_count = args.pairs;
  spec.size = args.size;
  spec.change_rate = args.change_rate;
  spec.jitter = args.jitter;
  spec.blob_count_min = args.blob_count[0];
  spec.blob_count_max = args.blob_count[1];
  spec.blob_side_min = args.blob_size[0];
  spec.blob_side_max = args.blob_size[1];
  spec.resolution = args.resolution;
  const DatasetManifest manifest = generate_dataset(spec, args.out);
  std::cout << "generated " << manifest.records.size() << " pairs under "
            << args.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak change-detection supervision toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  ChangemapArgs changemap_args;
  CLI::App* cmd = app.add_subcommand(
      "changemap", "Change maps from the mask pairs of a manifest");
  cmd->add_option("--manifest", changemap_args.manifest)->required();
  cmd->add_option("--out", changemap_args.out_dir)->required();
  cmd->add_option("--mode", changemap_args.mode)
      ->check(CLI::IsMember({"siou", "xor", "or", "postclass"}));
  cmd->add_option("--tau", changemap_args.tau);
  cmd->add_option("--classes", changemap_args.classes);
  cmd->add_option("--class-count", changemap_args.class_count);
  cmd->add_option("--connectivity", changemap_args.connectivity);
  cmd->add_option("--threads", changemap_args.threads);
  cmd->callback([&] { rc = run_changemap(changemap_args); });

  BatchPlanArgs batch_args;
  cmd = app.add_subcommand("batch-plan",
                           "Real/fake batch composition for training");
  cmd->add_option("--manifest", batch_args.manifest)->required();
  cmd->add_option("--batch-size", batch_args.batch_size)->required();
  cmd->add_option("--p-real", batch_args.p_real);
  cmd->add_option("--seed", batch_args.seed)->required();
  cmd->add_option("--batches", batch_args.batches);
  cmd->add_option("--out", batch_args.out);
  cmd->add_option("--threads", batch_args.threads);
  cmd->callback([&] { rc = run_batch_plan(batch_args); });

  RefineArgs refine_args;
  cmd = app.add_subcommand("refine",
                           "Drop train records with excess predicted change");
  cmd->add_option("--manifest", refine_args.manifest)->required();
  cmd->add_option("--pred-dir", refine_args.pred_dir)->required();
  cmd->add_option("--threshold", refine_args.threshold);
  cmd->add_option("--out", refine_args.out)->required();
  cmd->add_option("--report", refine_args.report);
  cmd->callback([&] { rc = run_refine(refine_args); });

  EvaluateArgs eval_args;
  cmd = app.add_subcommand("evaluate",
                           "Pixel metrics and object statistics");
  cmd->add_option("--pred", eval_args.pred_dir)->required();
  cmd->add_option("--ref", eval_args.ref_dir)->required();
  cmd->add_option("--manifest", eval_args.manifest);
  cmd->add_option("--out", eval_args.out);
  cmd->add_option("--resolution", eval_args.resolution);
  cmd->add_flag("--median-filter", eval_args.median);
  cmd->add_option("--window", eval_args.window);
  cmd->add_flag("--pretty", eval_args.pretty);
  cmd->callback([&] { rc = run_evaluate(eval_args); });

  TileArgs tile_args;
  cmd = app.add_subcommand("tile", "Plan a tile grid and extract tiles");
  cmd->add_option("--input", tile_args.input);
  cmd->add_option("--width", tile_args.width);
  cmd->add_option("--height", tile_args.height);
  cmd->add_option("--size", tile_args.size);
  cmd->add_option("--overlap", tile_args.overlap);
  cmd->add_option("--grid", tile_args.grid)->required();
  cmd->add_option("--out-dir", tile_args.out_dir);
  cmd->callback([&] { rc = run_tile(tile_args); });

  StitchArgs stitch_args;
  cmd = app.add_subcommand("stitch", "Reassemble tiles into a change map");
  cmd->add_option("--grid", stitch_args.grid)->required();
  cmd->add_option("--tiles-dir", stitch_args.tiles_dir)->required();
  cmd->add_option("--out", stitch_args.out)->required();
  cmd->callback([&] { rc = run_stitch(stitch_args); });

  MergeArgs merge_args;
  cmd = app.add_subcommand("merge-classes",
                           "Collapse classes to a binary mask");
  cmd->add_option("--input", merge_args.input)->required();
  cmd->add_option("--out", merge_args.out)->required();
  cmd->add_option("--foreground", merge_args.foreground)->required();
  cmd->add_option("--class-count", merge_args.class_count);
  cmd->callback([&] { rc = run_merge_classes(merge_args); });

  ResampleArgs resample_args;
  cmd = app.add_subcommand("resample", "Nearest-neighbour downsampling");
  cmd->add_option("--input", resample_args.input)->required();
  cmd->add_option("--out", resample_args.out)->required();
  cmd->add_option("--factor", resample_args.factor)->required();
  cmd->callback([&] { rc = run_resample(resample_args); });

  SynthArgs synth_args;
  cmd = app.add_subcommand("synth", "Generate a synthetic pair dataset");
  cmd->add_option("--seed", synth_args.seed)->required();
  cmd->add_option("--pairs", synth_args.pairs);
  cmd->add_option("--size", synth_args.size);
  cmd->add_option("--change-rate", synth_args.change_rate);
  cmd->add_option("--jitter", synth_args.jitter);
  cmd->add_option("--blob-count", synth_args.blob_count)->expected(2);
  cmd->add_option("--blob-size", synth_args.blob_size)->expected(2);
  cmd->add_option("--resolution", synth_args.resolution);
  cmd->add_option("--out", synth_args.out)->required();
  cmd->callback([&] { rc = run_synth(synth_args); });

  ValidateArgs validate_args;
  cmd = app.add_subcommand("validate", "Check a mask or manifest");
  cmd->add_option("--input", validate_args.input);
  cmd->add_option("--manifest", validate_args.manifest);
  cmd->add_option("--class-count", validate_args.class_count);
  cmd->add_option("--resolution", validate_args.resolution);
  cmd->callback([&] {
    if (validate_args.input.empty() && validate_args.manifest.empty())
      throw ArgumentError("either --input or --manifest is required");
    rc = run_validate(validate_args);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << app.help();
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
