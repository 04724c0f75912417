#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cyclesteg/image.hpp"
#include "cyclesteg/message_codec.hpp"

namespace cyclesteg {

enum class MethodId { ClassicLsb, Karim, Cyclic };

// Column order used by every report: classical LSB, Karim, cyclic.
inline constexpr std::array<MethodId, 3> kAllMethods = {MethodId::ClassicLsb,
                                                        MethodId::Karim, MethodId::Cyclic};

// "lsb", "karim", "cyclic".
std::string_view to_string(MethodId method) noexcept;
std::string_view display_name(MethodId method) noexcept;
// Throws InvalidArgument.
MethodId parse_method(std::string_view name);

inline constexpr bool requires_key(MethodId method) noexcept {
  return method == MethodId::Karim;
}

// Bit string that selects GREEN or BLUE per pixel for the keyed method. Key
// position k is reused cyclically as key[k mod size].
class StegoKey {
 public:
  // Throws InvalidKey if empty.
  explicit StegoKey(BitSequence bits);

  // Each hex digit contributes four bits, most significant first. Throws
  // InvalidKey on empty input or non-hex characters.
  static StegoKey from_hex(std::string_view hex);

  std::uint8_t bit_for(std::size_t position) const noexcept {
    return bits_[position % bits_.size()];
  }
  const BitSequence& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }

 private:
  BitSequence bits_;
};

struct EmbedReport {
  RgbImage stego;
  std::size_t bits_embedded = 0;
  std::size_t samples_changed = 0;
};

// The channelFlag of the cyclic method: 1,2,3 for RED,GREEN,BLUE, wrapping
// back to 1 after BLUE.
class ChannelCursor {
 public:
  int flag() const noexcept { return flag_; }
  std::size_t pixel() const noexcept { return pixel_; }
  Channel channel() const noexcept { return static_cast<Channel>(flag_ - 1); }

  void advance() noexcept {
    ++pixel_;
    ++flag_;
    if (flag_ > 3) flag_ = 1;
  }

 private:
  int flag_ = 1;
  std::size_t pixel_ = 0;
};

constexpr Channel channel_for_index(std::size_t index) noexcept {
  return static_cast<Channel>(index % 3);
}

// Karim channel rule: d = LSB(red) XOR key bit; d == 0 -> GREEN, d == 1 -> BLUE.
constexpr Channel karim_channel(std::uint8_t red, std::uint8_t key_bit) noexcept {
  return (extract_lsb(red) ^ (key_bit & 1u)) == 0 ? Channel::Green : Channel::Blue;
}

// Bit-level codecs. Bit k always goes to pixel k in row-major order.
// Embedding throws PayloadExceedsCapacity, extraction RequestExceedsCapacity.
EmbedReport embed_cyclic(const RgbImage& cover, const BitSequence& payload);
BitSequence extract_cyclic(const RgbImage& stego, std::size_t nbits);

EmbedReport embed_classic_lsb(const RgbImage& cover, const BitSequence& payload);
BitSequence extract_classic_lsb(const RgbImage& stego, std::size_t nbits);

EmbedReport embed_karim(const RgbImage& cover, const BitSequence& payload,
                        const StegoKey& key);
BitSequence extract_karim(const RgbImage& stego, std::size_t nbits, const StegoKey& key);

// Dispatch by method. Throws MissingKey if the keyed method has no key and
// UnexpectedKey if another method is given one.
EmbedReport embed_bits(const RgbImage& cover, const BitSequence& payload, MethodId method,
                       const std::optional<StegoKey>& key = std::nullopt);
BitSequence extract_bits(const RgbImage& stego, std::size_t nbits, MethodId method,
                         const std::optional<StegoKey>& key = std::nullopt);

// Length-framed byte messages on top of the bit codecs.
EmbedReport embed_message(const RgbImage& cover, std::span<const std::uint8_t> data,
                          MethodId method,
                          const std::optional<StegoKey>& key = std::nullopt);
Bytes extract_message(const RgbImage& stego, MethodId method,
                      const std::optional<StegoKey>& key = std::nullopt);

}  // namespace cyclesteg
