#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "cyclesteg/error.hpp"
#include "cyclesteg/png_io.hpp"
#include "test_support.hpp"

using namespace cyclesteg;

namespace {

const std::filesystem::path kFixtures = CYCLESTEG_FIXTURES;

ErrorCode load_error(const std::filesystem::path& path) {
  try {
    load_image(path);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected load failure for " << path);
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("2x2 black RGB fixture") {
  const RgbImage image = load_image(kFixtures / "black_2x2.png");
  CHECK(image.width() == 2);
  CHECK(image.height() == 2);
  CHECK(image == RgbImage(2, 2, 0, 0, 0));
}

// Expected samples below were decoded from the fixtures with an independent
// decoder (Pillow).
TEST_CASE("RGBA input drops alpha without compositing") {
  const RgbImage image = load_image(kFixtures / "rgba_3x2.png");
  const std::vector<std::uint8_t> expected = {10, 20,  30,  40, 50,  60,  255, 0,   1,
                                              7,  8,   9,   200, 201, 202, 1,  254, 127};
  CHECK(image.width() == 3);
  CHECK(image.height() == 2);
  CHECK(image.to_interleaved() == expected);

  testing::TempDir dir;
  save_image(image, dir / "resaved.png");
  CHECK(load_image(dir / "resaved.png") == image);
  // Re-saved as colour type 2 (RGB): IHDR byte 25 of the file.
  std::ifstream in(dir / "resaved.png", std::ios::binary);
  std::vector<char> head(26);
  in.read(head.data(), 26);
  CHECK(head[24] == 8);
  CHECK(head[25] == 2);
}

TEST_CASE("grayscale is replicated into all channels") {
  const RgbImage image = load_image(kFixtures / "gray_2x2.png");
  const std::uint8_t gray[] = {0, 17, 128, 255};
  for (std::size_t i = 0; i < 4; ++i)
    for (Channel c : kChannels) CHECK(image.sample(c, i) == gray[i]);
}

TEST_CASE("palette images are expanded") {
  const RgbImage image = load_image(kFixtures / "palette_2x2.png");
  const std::vector<std::uint8_t> expected = {255, 0, 0, 0, 255, 0, 0, 0, 255, 12, 34, 56};
  CHECK(image.to_interleaved() == expected);
}

TEST_CASE("load errors") {
  CHECK(load_error(kFixtures / "does_not_exist.png") == ErrorCode::FileNotFound);
  CHECK(load_error(kFixtures / "truncated.png") == ErrorCode::UnsupportedFormat);
  CHECK(load_error(kFixtures / "not_a_png.png") == ErrorCode::UnsupportedFormat);
  CHECK(load_error(kFixtures / "gray16_2x2.png") == ErrorCode::UnsupportedFormat);
}

TEST_CASE("save/load round trip is bit exact") {
  testing::TempDir dir;
  std::mt19937_64 rng(99);
  const RgbImage image = testing::random_image(rng, 16, 16);
  save_image(image, dir / "r.png");
  CHECK(load_image(dir / "r.png") == image);

  const RgbImage one(1, 1, 7, 8, 9);
  save_image(one, dir / "one.png");
  CHECK(load_image(dir / "one.png") == one);

  for (int trial = 0; trial < 20; ++trial) {
    const RgbImage img = testing::random_image(rng, 1 + rng() % 40, 1 + rng() % 40);
    REQUIRE(decode_png(encode_png(img)) == img);
  }
}

TEST_CASE("save to an unwritable path fails with IoError") {
  testing::TempDir dir;
  const RgbImage image(2, 2);
  try {
    save_image(image, dir / "missing_subdir" / "x.png");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}
