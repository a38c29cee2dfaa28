#include "tempweak/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>
#include <vector>

namespace tempweak {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct Gray8 {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;
};

[[noreturn]] void png_failure(png_structp, png_const_charp msg) {
  throw IoError(std::string("png: ") + msg);
}

void png_note(png_structp, png_const_charp) {}

Gray8 read_gray8(const std::filesystem::path& path) {
  FilePtr file(std::fopen(path.string().c_str(), "rb"));
  if (!file) throw IoError("cannot open " + path.string());

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                           png_failure, png_note);
  if (!png) throw IoError("png: reader allocation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png: info allocation failed");
  }

  Gray8 out;
  try {
    png_init_io(png, file.get());
    png_read_info(png, info);

    const int color = png_get_color_type(png, info);
    const int depth = png_get_bit_depth(png, info);
    if (color != PNG_COLOR_TYPE_GRAY || depth > 8)
      throw ParseError(path.string() + ": expected 8-bit grayscale PNG");
    if (depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    png_read_update_info(png, info);

    out.width = static_cast<int>(png_get_image_width(png, info));
    out.height = static_cast<int>(png_get_image_height(png, info));
    out.data.resize(static_cast<std::size_t>(out.width) * out.height);
    std::vector<png_bytep> rows(static_cast<std::size_t>(out.height));
    for (int y = 0; y < out.height; ++y)
      rows[static_cast<std::size_t>(y)] =
          out.data.data() + static_cast<std::size_t>(y) * out.width;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
  } catch (...) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw;
  }
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

void write_gray8(const std::filesystem::path& path, int width, int height,
                 const std::vector<std::uint8_t>& data) {
  FilePtr file(std::fopen(path.string().c_str(), "wb"));
  if (!file) throw IoError("cannot write " + path.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            png_failure, png_note);
  if (!png) throw IoError("png: writer allocation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png: info allocation failed");
  }

  try {
    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(width),
                 static_cast<png_uint_32>(height), 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < height; ++y)
      png_write_row(png, const_cast<png_bytep>(
                             data.data() + static_cast<std::size_t>(y) * width));
    png_write_end(png, info);
  } catch (...) {
    png_destroy_write_struct(&png, &info);
    throw;
  }
  png_destroy_write_struct(&png, &info);
}

}  // namespace

SemanticMask read_mask_png(const std::filesystem::path& path, int class_count,
                           std::optional<double> resolution) {
  Gray8 raw = read_gray8(path);
  SemanticMask mask =
      make_mask(raw.width, raw.height, class_count, 0, resolution);
  for (std::size_t i = 0; i < raw.data.size(); ++i) {
    if (raw.data[i] >= class_count)
      throw ParseError(path.string() + ": class " +
                       std::to_string(raw.data[i]) + " out of range for " +
                       std::to_string(class_count) + " classes");
    mask.data[i] = raw.data[i];
  }
  return mask;
}

void write_mask_png(const std::filesystem::path& path,
                    const SemanticMask& mask) {
  write_gray8(path, mask.width, mask.height, mask.data);
}

ChangeMask read_change_png(const std::filesystem::path& path) {
  Gray8 raw = read_gray8(path);
  ChangeMask mask = make_change_mask(raw.width, raw.height);
  for (std::size_t i = 0; i < raw.data.size(); ++i) {
    if (raw.data[i] == 0)
      mask.data[i] = 0;
    else if (raw.data[i] == 255)
      mask.data[i] = 1;
    else
      throw ParseError(path.string() + ": change mask value " +
                       std::to_string(raw.data[i]) + " is neither 0 nor 255");
  }
  return mask;
}

void write_change_png(const std::filesystem::path& path,
                      const ChangeMask& mask) {
  std::vector<std::uint8_t> bytes(mask.data.size());
  for (std::size_t i = 0; i < mask.data.size(); ++i)
    bytes[i] = mask.data[i] ? 255 : 0;
  write_gray8(path, mask.width, mask.height, bytes);
}

}  // namespace tempweak
