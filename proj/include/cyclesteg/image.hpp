#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cyclesteg {

enum class Channel : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

inline constexpr std::array<Channel, 3> kChannels = {Channel::Red, Channel::Green,
                                                     Channel::Blue};

std::string_view to_string(Channel c) noexcept;

// One M x N grid of 8-bit intensities, row-major.
class Plane {
 public:
  Plane(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  Plane(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return samples_.size(); }

  std::uint8_t at(std::size_t x, std::size_t y) const { return samples_[y * width_ + x]; }
  std::uint8_t operator[](std::size_t index) const { return samples_[index]; }
  std::uint8_t& operator[](std::size_t index) { return samples_[index]; }

  std::span<const std::uint8_t> samples() const noexcept { return samples_; }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> samples_;
};

// Three equally sized planes, indexed by Channel. Pixels are addressed by
// row-major index (y * width + x).
class RgbImage {
 public:
  // Throws InvalidArgument when width or height is zero.
  RgbImage(std::size_t width, std::size_t height);

  // Solid fill.
  RgbImage(std::size_t width, std::size_t height, std::uint8_t r, std::uint8_t g,
           std::uint8_t b);

  // Interleaved RGBRGB... buffer of exactly 3 * width * height bytes.
  static RgbImage from_interleaved(std::size_t width, std::size_t height,
                                   std::span<const std::uint8_t> rgb);

  std::size_t width() const noexcept { return planes_[0].width(); }
  std::size_t height() const noexcept { return planes_[0].height(); }
  std::size_t pixel_count() const noexcept { return planes_[0].size(); }

  std::uint8_t sample(Channel c, std::size_t pixel) const {
    return planes_[static_cast<std::size_t>(c)][pixel];
  }
  void set_sample(Channel c, std::size_t pixel, std::uint8_t value) {
    planes_[static_cast<std::size_t>(c)][pixel] = value;
  }

  const Plane& plane(Channel c) const noexcept {
    return planes_[static_cast<std::size_t>(c)];
  }

  std::vector<std::uint8_t> to_interleaved() const;

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  RgbImage(Plane red, Plane green, Plane blue);
  friend RgbImage merge_planes(Plane red, Plane green, Plane blue);

  std::array<Plane, 3> planes_;
};

struct PlaneSet {
  Plane red;
  Plane green;
  Plane blue;
};

PlaneSet split_planes(const RgbImage& image);

// Throws DimensionMismatch when the planes differ in shape.
RgbImage merge_planes(Plane red, Plane green, Plane blue);

constexpr std::uint8_t replace_lsb(std::uint8_t sample, std::uint8_t bit) noexcept {
  return static_cast<std::uint8_t>((sample & 0xFEu) | (bit & 1u));
}

constexpr std::uint8_t extract_lsb(std::uint8_t sample) noexcept {
  return static_cast<std::uint8_t>(sample & 1u);
}

// One bit per pixel for every method.
constexpr std::size_t capacity_bits(std::size_t width, std::size_t height) noexcept {
  return width * height;
}
inline std::size_t capacity_bits(const RgbImage& image) noexcept {
  return image.pixel_count();
}

// Bytes of message that fit after the 32-bit length header.
std::size_t payload_capacity_bytes(const RgbImage& image) noexcept;

}  // namespace cyclesteg
