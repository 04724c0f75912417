#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cyclesteg/image.hpp"

namespace cyclesteg {

// Decodes an 8-bit PNG. RGB is taken as-is, RGBA has alpha dropped (not
// composited), grayscale is replicated into all three channels and palettes
// are expanded. 16-bit files are rejected since their low bits would be lost.
RgbImage decode_png(std::span<const std::uint8_t> file_bytes);
std::vector<std::uint8_t> encode_png(const RgbImage& image);

// Throws FileNotFound, UnsupportedFormat.
RgbImage load_image(const std::filesystem::path& path);

// Always writes 8-bit RGB. Throws IoError.
void save_image(const RgbImage& image, const std::filesystem::path& path);

}  // namespace cyclesteg
