#include "cyclesteg/image.hpp"

#include <string>
#include <utility>

#include "cyclesteg/error.hpp"
#include "cyclesteg/message_codec.hpp"

namespace cyclesteg {

std::string_view to_string(Channel c) noexcept {
  switch (c) {
    case Channel::Red: return "red";
    case Channel::Green: return "green";
    case Channel::Blue: return "blue";
  }
  return "?";
}

namespace {

void require_nonempty(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0)
    throw Error(ErrorCode::InvalidArgument,
                "image dimensions must be at least 1x1, got " + std::to_string(width) +
                    "x" + std::to_string(height));
}

}  // namespace

Plane::Plane(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height), samples_(width * height, fill) {
  require_nonempty(width, height);
}

Plane::Plane(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  require_nonempty(width, height);
  if (samples_.size() != width * height)
    throw Error(ErrorCode::DimensionMismatch, "plane sample count does not match " +
                                                  std::to_string(width) + "x" +
                                                  std::to_string(height));
}

RgbImage::RgbImage(std::size_t width, std::size_t height)
    : RgbImage(width, height, 0, 0, 0) {}

RgbImage::RgbImage(std::size_t width, std::size_t height, std::uint8_t r,
                   std::uint8_t g, std::uint8_t b)
    : planes_{Plane(width, height, r), Plane(width, height, g),
              Plane(width, height, b)} {}

RgbImage::RgbImage(Plane red, Plane green, Plane blue)
    : planes_{std::move(red), std::move(green), std::move(blue)} {}

RgbImage RgbImage::from_interleaved(std::size_t width, std::size_t height,
                                    std::span<const std::uint8_t> rgb) {
  RgbImage image(width, height);
  if (rgb.size() != 3 * width * height)
    throw Error(ErrorCode::DimensionMismatch,
                "interleaved buffer has " + std::to_string(rgb.size()) +
                    " bytes, expected " + std::to_string(3 * width * height));
  for (std::size_t i = 0; i < width * height; ++i)
    for (std::size_t c = 0; c < 3; ++c) image.planes_[c][i] = rgb[3 * i + c];
  return image;
}

std::vector<std::uint8_t> RgbImage::to_interleaved() const {
  std::vector<std::uint8_t> out(3 * pixel_count());
  for (std::size_t i = 0; i < pixel_count(); ++i)
    for (std::size_t c = 0; c < 3; ++c) out[3 * i + c] = planes_[c][i];
  return out;
}

PlaneSet split_planes(const RgbImage& image) {
  return {image.plane(Channel::Red), image.plane(Channel::Green),
          image.plane(Channel::Blue)};
}

RgbImage merge_planes(Plane red, Plane green, Plane blue) {
  auto same_shape = [](const Plane& a, const Plane& b) {
    return a.width() == b.width() && a.height() == b.height();
  };
  if (!same_shape(red, green) || !same_shape(red, blue))
    throw Error(ErrorCode::DimensionMismatch, "planes have different dimensions");
  return RgbImage(std::move(red), std::move(green), std::move(blue));
}

std::size_t payload_capacity_bytes(const RgbImage& image) noexcept {
  const std::size_t bits = capacity_bits(image);
  return bits < kFrameHeaderBits ? 0 : (bits - kFrameHeaderBits) / 8;
}

}  // namespace cyclesteg
