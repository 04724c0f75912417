#include "cyclesteg/png_io.hpp"

#include <png.h>

#include <csetjmp>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>

#include "cyclesteg/error.hpp"

namespace cyclesteg {

namespace {

constexpr std::size_t kSignatureBytes = 8;

// libpng reports errors by longjmp; the handlers below record the message and
// jump back to the setjmp point inside decode/encode, which then throws.
struct PngContext {
  std::jmp_buf jump;
  char message[256] = {};
  std::span<const std::uint8_t> input;
  std::size_t offset = 0;
  std::vector<std::uint8_t>* output = nullptr;
};

[[noreturn]] void on_error(png_structp png, png_const_charp msg) {
  auto* ctx = static_cast<PngContext*>(png_get_error_ptr(png));
  std::strncpy(ctx->message, msg, sizeof(ctx->message) - 1);
  std::longjmp(ctx->jump, 1);
}

void on_warning(png_structp, png_const_charp) {}

void read_from_memory(png_structp png, png_bytep dest, png_size_t length) {
  auto* ctx = static_cast<PngContext*>(png_get_io_ptr(png));
  if (ctx->input.size() - ctx->offset < length) png_error(png, "unexpected end of PNG data");
  std::memcpy(dest, ctx->input.data() + ctx->offset, length);
  ctx->offset += length;
}

void write_to_memory(png_structp png, png_bytep src, png_size_t length) {
  auto* ctx = static_cast<PngContext*>(png_get_io_ptr(png));
  ctx->output->insert(ctx->output->end(), src, src + length);
}

void flush_noop(png_structp) {}

struct ReadHandles {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~ReadHandles() { png_destroy_read_struct(&png, info ? &info : nullptr, nullptr); }
};

struct WriteHandles {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~WriteHandles() { png_destroy_write_struct(&png, info ? &info : nullptr); }
};

}  // namespace

RgbImage decode_png(std::span<const std::uint8_t> file_bytes) {
  if (file_bytes.size() < kSignatureBytes ||
      png_sig_cmp(file_bytes.data(), 0, kSignatureBytes) != 0)
    throw Error(ErrorCode::UnsupportedFormat, "not a PNG file");

  auto ctx = std::make_unique<PngContext>();
  ctx->input = file_bytes;
  auto handles = std::make_unique<ReadHandles>();
  handles->png = png_create_read_struct(PNG_LIBPNG_VER_STRING, ctx.get(), on_error,
                                        on_warning);
  if (handles->png == nullptr) throw Error(ErrorCode::IoError, "png_create_read_struct failed");
  handles->info = png_create_info_struct(handles->png);
  if (handles->info == nullptr) throw Error(ErrorCode::IoError, "png_create_info_struct failed");

  // Filled after setjmp; heap storage keeps it valid across longjmp.
  auto rgb = std::make_unique<std::vector<std::uint8_t>>();
  auto rows = std::make_unique<std::vector<png_bytep>>();
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  bool sixteen_bit = false;

  if (setjmp(ctx->jump)) {
    throw Error(ErrorCode::UnsupportedFormat,
                std::string("PNG decode failed: ") + ctx->message);
  }

  png_structp png = handles->png;
  png_infop info = handles->info;
  png_set_read_fn(png, ctx.get(), read_from_memory);
  png_read_info(png, info);

  width = png_get_image_width(png, info);
  height = png_get_image_height(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  const int color_type = png_get_color_type(png, info);
  if (bit_depth == 16) {
    sixteen_bit = true;
  } else {
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
      png_set_expand_gray_1_2_4_to_8(png);
    if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
      png_set_gray_to_rgb(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    const std::size_t row_bytes = png_get_rowbytes(png, info);
    if (row_bytes != 3 * static_cast<std::size_t>(width))
      png_error(png, "unexpected row layout after transforms");
    rgb->resize(row_bytes * height);
    rows->resize(height);
    for (png_uint_32 y = 0; y < height; ++y) (*rows)[y] = rgb->data() + y * row_bytes;
    png_read_image(png, rows->data());
    png_read_end(png, nullptr);
  }

  if (sixteen_bit)
    throw Error(ErrorCode::UnsupportedFormat, "16-bit PNG depth is not supported");
  return RgbImage::from_interleaved(width, height, *rgb);
}

std::vector<std::uint8_t> encode_png(const RgbImage& image) {
  const auto interleaved = image.to_interleaved();
  auto ctx = std::make_unique<PngContext>();
  auto out = std::make_unique<std::vector<std::uint8_t>>();
  ctx->output = out.get();
  auto handles = std::make_unique<WriteHandles>();
  handles->png = png_create_write_struct(PNG_LIBPNG_VER_STRING, ctx.get(), on_error,
                                         on_warning);
  if (handles->png == nullptr) throw Error(ErrorCode::IoError, "png_create_write_struct failed");
  handles->info = png_create_info_struct(handles->png);
  if (handles->info == nullptr) throw Error(ErrorCode::IoError, "png_create_info_struct failed");

  auto rows = std::make_unique<std::vector<png_bytep>>(image.height());
  const std::size_t row_bytes = 3 * image.width();
  for (std::size_t y = 0; y < image.height(); ++y)
    (*rows)[y] = const_cast<png_bytep>(interleaved.data() + y * row_bytes);

  if (setjmp(ctx->jump)) {
    throw Error(ErrorCode::IoError, std::string("PNG encode failed: ") + ctx->message);
  }

  png_structp png = handles->png;
  png_infop info = handles->info;
  png_set_write_fn(png, ctx.get(), write_to_memory, flush_noop);
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width()),
               static_cast<png_uint_32>(image.height()), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows->data());
  png_write_end(png, nullptr);

  return std::move(*out);
}

RgbImage load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::FileNotFound, "cannot open image '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::IoError, "read failed for '" + path.string() + "'");
  try {
    return decode_png(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void save_image(const RgbImage& image, const std::filesystem::path& path) {
  const auto bytes = encode_png(image);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path.string() + "'");
}

}  // namespace cyclesteg
