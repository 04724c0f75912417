#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace cyclesteg {

// Ordered secret-data bits. Each element is stored as 0 or 1; bytes expand
// MSB-first.
class BitSequence {
 public:
  BitSequence() = default;
  BitSequence(std::initializer_list<int> bits);

  // Parses a string of '0'/'1' characters; other characters are rejected.
  static BitSequence from_string(std::string_view text);

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  void reserve(std::size_t n) { bits_.reserve(n); }

  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  auto begin() const noexcept { return bits_.begin(); }
  auto end() const noexcept { return bits_.end(); }

  // Copy of bits [offset, offset + count).
  BitSequence slice(std::size_t offset, std::size_t count) const;

  std::string to_string() const;

  friend bool operator==(const BitSequence&, const BitSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

using Bytes = std::vector<std::uint8_t>;

inline constexpr std::size_t kFrameHeaderBits = 32;
inline constexpr std::uint64_t kMaxFrameBodyBytes = 0xFFFF'FFFFull;

BitSequence bytes_to_bits(std::span<const std::uint8_t> data);

// Throws NonOctetLength when bits.size() is not a multiple of 8.
Bytes bits_to_bytes(const BitSequence& bits);

// Throws PayloadTooLarge if a body of `byte_count` bytes cannot be framed.
void check_frame_length(std::uint64_t byte_count);

// 32-bit big-endian byte count followed by the body bits.
BitSequence frame_payload(std::span<const std::uint8_t> data);

// Decodes just the 32-bit header. Throws TruncatedHeader on short input.
std::uint32_t decode_frame_header(const BitSequence& bits);

struct ParsedFrame {
  std::uint32_t body_bytes = 0;
  BitSequence body;
};

// Throws TruncatedHeader / TruncatedBody. Bits past the declared body are
// ignored.
ParsedFrame parse_frame(const BitSequence& bits);

}  // namespace cyclesteg
