#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclesteg/error.hpp"
#include "cyclesteg/image.hpp"
#include "test_support.hpp"

using namespace cyclesteg;

TEST_CASE("replace_lsb on the worked example") {
  const std::uint8_t cover[] = {143, 134, 126, 99, 44, 134, 79, 127};
  const std::uint8_t expected[] = {142, 135, 126, 98, 44, 134, 79, 126};
  const BitSequence message = {0, 1, 0, 0, 0, 0, 1, 0};  // 'B'
  for (std::size_t i = 0; i < 8; ++i) CHECK(replace_lsb(cover[i], message[i]) == expected[i]);
}

TEST_CASE("replace_lsb and extract_lsb over every sample and bit") {
  for (int s = 0; s < 256; ++s) {
    const auto sample = static_cast<std::uint8_t>(s);
    CHECK(replace_lsb(sample, extract_lsb(sample)) == sample);
    for (std::uint8_t bit : {0, 1}) {
      const std::uint8_t out = replace_lsb(sample, bit);
      REQUIRE(extract_lsb(out) == bit);
      REQUIRE(std::abs(int{out} - s) <= 1);
      REQUIRE((out == sample) == (extract_lsb(sample) == bit));
    }
  }
  CHECK(extract_lsb(142) == 0);
  CHECK(extract_lsb(135) == 1);
  CHECK(extract_lsb(0) == 0);
}

TEST_CASE("image dimensions must be positive") {
  CHECK_THROWS_AS(RgbImage(0, 4), Error);
  CHECK_THROWS_AS(RgbImage(4, 0), Error);
  CHECK_THROWS_AS(RgbImage::from_interleaved(2, 2, std::vector<std::uint8_t>(11)), Error);
}

TEST_CASE("split_planes on a solid image") {
  const RgbImage image(3, 2, 10, 20, 30);
  const PlaneSet planes = split_planes(image);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(planes.red[i] == 10);
    CHECK(planes.green[i] == 20);
    CHECK(planes.blue[i] == 30);
  }
  CHECK(planes.red.width() == 3);
  CHECK(planes.red.height() == 2);

  const PlaneSet tiny = split_planes(RgbImage(1, 1, 1, 2, 3));
  CHECK(tiny.red.size() == 1);
  CHECK(tiny.blue[0] == 3);
}

TEST_CASE("split then merge is the identity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const RgbImage image = testing::random_image(rng, 1 + rng() % 20, 1 + rng() % 20);
    PlaneSet p = split_planes(image);
    REQUIRE(merge_planes(std::move(p.red), std::move(p.green), std::move(p.blue)) == image);
  }
}

TEST_CASE("merge_planes rejects mismatched planes") {
  CHECK_THROWS_AS(merge_planes(Plane(2, 2), Plane(2, 2), Plane(2, 3)), Error);
}

TEST_CASE("interleaved layout is row-major RGB") {
  const std::vector<std::uint8_t> rgb = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  const RgbImage image = RgbImage::from_interleaved(2, 2, rgb);
  CHECK(image.plane(Channel::Red).at(1, 0) == 4);
  CHECK(image.plane(Channel::Blue).at(0, 1) == 9);
  CHECK(image.sample(Channel::Green, 3) == 11);
  CHECK(image.to_interleaved() == rgb);
}

TEST_CASE("capacity is one bit per pixel") {
  CHECK(capacity_bits(RgbImage(256, 256)) == 65536);
  CHECK(capacity_bits(RgbImage(128, 128)) == 16384);
  CHECK(capacity_bits(RgbImage(1, 1)) == 1);
  CHECK(payload_capacity_bytes(RgbImage(1, 1)) == 0);
  CHECK(payload_capacity_bytes(RgbImage(256, 256)) == 8188);
  CHECK(payload_capacity_bytes(RgbImage(6, 7)) == 1);
}
