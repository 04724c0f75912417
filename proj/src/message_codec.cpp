#include "cyclesteg/message_codec.hpp"

#include <string>

#include "cyclesteg/error.hpp"

namespace cyclesteg {

BitSequence::BitSequence(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1)
      throw Error(ErrorCode::InvalidArgument, "bit values must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitSequence BitSequence::from_string(std::string_view text) {
  BitSequence out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw Error(ErrorCode::InvalidArgument,
                  std::string("not a bit character: '") + c + "'");
    out.push_back(c == '1');
  }
  return out;
}

BitSequence BitSequence::slice(std::size_t offset, std::size_t count) const {
  if (offset > bits_.size() || count > bits_.size() - offset)
    throw Error(ErrorCode::InvalidArgument, "bit slice out of range");
  BitSequence out;
  out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                   bits_.begin() + static_cast<std::ptrdiff_t>(offset + count));
  return out;
}

std::string BitSequence::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

BitSequence bytes_to_bits(std::span<const std::uint8_t> data) {
  BitSequence bits;
  bits.reserve(data.size() * 8);
  for (std::uint8_t byte : data)
    for (int shift = 7; shift >= 0; --shift) bits.push_back((byte >> shift) & 1u);
  return bits;
}

Bytes bits_to_bytes(const BitSequence& bits) {
  if (bits.size() % 8 != 0)
    throw Error(ErrorCode::NonOctetLength,
                "bit count " + std::to_string(bits.size()) +
                    " is not a multiple of 8");
  Bytes out(bits.size() / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    out[i / 8] = static_cast<std::uint8_t>((out[i / 8] << 1) | bits[i]);
  return out;
}

void check_frame_length(std::uint64_t byte_count) {
  if (byte_count > kMaxFrameBodyBytes)
    throw Error(ErrorCode::PayloadTooLarge,
                "payload of " + std::to_string(byte_count) +
                    " bytes does not fit a 32-bit length header");
}

BitSequence frame_payload(std::span<const std::uint8_t> data) {
  check_frame_length(data.size());
  const auto length = static_cast<std::uint32_t>(data.size());
  BitSequence bits;
  bits.reserve(kFrameHeaderBits + data.size() * 8);
  for (int shift = 31; shift >= 0; --shift) bits.push_back((length >> shift) & 1u);
  for (std::uint8_t byte : data)
    for (int shift = 7; shift >= 0; --shift) bits.push_back((byte >> shift) & 1u);
  return bits;
}

std::uint32_t decode_frame_header(const BitSequence& bits) {
  if (bits.size() < kFrameHeaderBits)
    throw Error(ErrorCode::TruncatedHeader,
                "need 32 header bits, have " + std::to_string(bits.size()));
  std::uint32_t length = 0;
  for (std::size_t i = 0; i < kFrameHeaderBits; ++i)
    length = (length << 1) | bits[i];
  return length;
}

ParsedFrame parse_frame(const BitSequence& bits) {
  ParsedFrame frame;
  frame.body_bytes = decode_frame_header(bits);
  const std::uint64_t body_bits = std::uint64_t{frame.body_bytes} * 8;
  if (bits.size() - kFrameHeaderBits < body_bits)
    throw Error(ErrorCode::TruncatedBody,
                "header declares " + std::to_string(frame.body_bytes) +
                    " bytes but only " +
                    std::to_string(bits.size() - kFrameHeaderBits) +
                    " body bits follow");
  frame.body = bits.slice(kFrameHeaderBits, static_cast<std::size_t>(body_bits));
  return frame;
}

}  // namespace cyclesteg
