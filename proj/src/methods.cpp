#include "cyclesteg/methods.hpp"

#include <string>

#include "cyclesteg/error.hpp"

namespace cyclesteg {

std::string_view to_string(MethodId method) noexcept {
  switch (method) {
    case MethodId::ClassicLsb: return "lsb";
    case MethodId::Karim: return "karim";
    case MethodId::Cyclic: return "cyclic";
  }
  return "?";
}

std::string_view display_name(MethodId method) noexcept {
  switch (method) {
    case MethodId::ClassicLsb: return "LSB Method";
    case MethodId::Karim: return "Karim's Method";
    case MethodId::Cyclic: return "Cyclic Method";
  }
  return "?";
}

MethodId parse_method(std::string_view name) {
  for (MethodId m : kAllMethods)
    if (to_string(m) == name) return m;
  throw Error(ErrorCode::InvalidArgument,
              "unknown method '" + std::string(name) + "' (expected lsb, karim or cyclic)");
}

StegoKey::StegoKey(BitSequence bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw Error(ErrorCode::InvalidKey, "stego key must not be empty");
}

StegoKey StegoKey::from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw Error(ErrorCode::InvalidKey, "stego key must not be empty");
  BitSequence bits;
  bits.reserve(hex.size() * 4);
  for (char c : hex) {
    int nibble;
    if (c >= '0' && c <= '9')
      nibble = c - '0';
    else if (c >= 'a' && c <= 'f')
      nibble = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      nibble = c - 'A' + 10;
    else
      throw Error(ErrorCode::InvalidKey, std::string("invalid hex digit in key: '") + c + "'");
    for (int shift = 3; shift >= 0; --shift) bits.push_back((nibble >> shift) & 1);
  }
  return StegoKey(std::move(bits));
}

namespace {

void require_embed_capacity(const RgbImage& cover, std::size_t nbits) {
  if (nbits > capacity_bits(cover))
    throw Error(ErrorCode::PayloadExceedsCapacity,
                std::to_string(nbits) + " bits exceed image capacity of " +
                    std::to_string(capacity_bits(cover)) + " bits");
}

void require_extract_capacity(const RgbImage& stego, std::size_t nbits) {
  if (nbits > capacity_bits(stego))
    throw Error(ErrorCode::RequestExceedsCapacity,
                "cannot read " + std::to_string(nbits) + " bits from an image holding " +
                    std::to_string(capacity_bits(stego)));
}

// Shared embed loop: `select(image, k)` names the channel receiving bit k at
// pixel k. Selectors must not depend on samples the loop can modify.
template <typename Selector>
EmbedReport embed_with(const RgbImage& cover, const BitSequence& payload, Selector select) {
  require_embed_capacity(cover, payload.size());
  EmbedReport report{cover, payload.size(), 0};
  for (std::size_t k = 0; k < payload.size(); ++k) {
    const Channel c = select(cover, k);
    const std::uint8_t before = cover.sample(c, k);
    const std::uint8_t after = replace_lsb(before, payload[k]);
    if (after != before) {
      report.stego.set_sample(c, k, after);
      ++report.samples_changed;
    }
  }
  return report;
}

template <typename Selector>
BitSequence extract_with(const RgbImage& stego, std::size_t nbits, Selector select) {
  require_extract_capacity(stego, nbits);
  BitSequence bits;
  bits.reserve(nbits);
  for (std::size_t k = 0; k < nbits; ++k)
    bits.push_back(extract_lsb(stego.sample(select(stego, k), k)));
  return bits;
}

auto cyclic_selector() {
  return [](const RgbImage&, std::size_t k) { return channel_for_index(k); };
}

auto blue_selector() {
  return [](const RgbImage&, std::size_t) { return Channel::Blue; };
}

// RED is never written, so the channel decision recomputes identically on
// the stego image.
auto karim_selector(const StegoKey& key) {
  return [&key](const RgbImage& image, std::size_t k) {
    return karim_channel(image.sample(Channel::Red, k), key.bit_for(k));
  };
}

const StegoKey& require_key_for(MethodId method, const std::optional<StegoKey>& key) {
  static const StegoKey unused(BitSequence{0});
  if (requires_key(method)) {
    if (!key)
      throw Error(ErrorCode::MissingKey,
                  std::string("method '") + std::string(to_string(method)) +
                      "' requires a key");
    return *key;
  }
  if (key)
    throw Error(ErrorCode::UnexpectedKey,
                std::string("method '") + std::string(to_string(method)) +
                    "' does not take a key");
  return unused;
}

}  // namespace

EmbedReport embed_cyclic(const RgbImage& cover, const BitSequence& payload) {
  return embed_with(cover, payload, cyclic_selector());
}

BitSequence extract_cyclic(const RgbImage& stego, std::size_t nbits) {
  return extract_with(stego, nbits, cyclic_selector());
}

EmbedReport embed_classic_lsb(const RgbImage& cover, const BitSequence& payload) {
  return embed_with(cover, payload, blue_selector());
}

BitSequence extract_classic_lsb(const RgbImage& stego, std::size_t nbits) {
  return extract_with(stego, nbits, blue_selector());
}

EmbedReport embed_karim(const RgbImage& cover, const BitSequence& payload,
                        const StegoKey& key) {
  return embed_with(cover, payload, karim_selector(key));
}

BitSequence extract_karim(const RgbImage& stego, std::size_t nbits, const StegoKey& key) {
  return extract_with(stego, nbits, karim_selector(key));
}

EmbedReport embed_bits(const RgbImage& cover, const BitSequence& payload, MethodId method,
                       const std::optional<StegoKey>& key) {
  const StegoKey& k = require_key_for(method, key);
  switch (method) {
    case MethodId::ClassicLsb: return embed_classic_lsb(cover, payload);
    case MethodId::Karim: return embed_karim(cover, payload, k);
    case MethodId::Cyclic: return embed_cyclic(cover, payload);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

BitSequence extract_bits(const RgbImage& stego, std::size_t nbits, MethodId method,
                         const std::optional<StegoKey>& key) {
  const StegoKey& k = require_key_for(method, key);
  switch (method) {
    case MethodId::ClassicLsb: return extract_classic_lsb(stego, nbits);
    case MethodId::Karim: return extract_karim(stego, nbits, k);
    case MethodId::Cyclic: return extract_cyclic(stego, nbits);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

EmbedReport embed_message(const RgbImage& cover, std::span<const std::uint8_t> data,
                          MethodId method, const std::optional<StegoKey>& key) {
  require_key_for(method, key);
  const std::uint64_t frame_bits = kFrameHeaderBits + std::uint64_t{data.size()} * 8;
  if (frame_bits > capacity_bits(cover))
    throw Error(ErrorCode::PayloadExceedsCapacity,
                std::to_string(data.size()) + "-byte message needs " +
                    std::to_string(frame_bits) + " bits; image holds " +
                    std::to_string(capacity_bits(cover)) + " (" +
                    std::to_string(payload_capacity_bytes(cover)) + " message bytes)");
  return embed_bits(cover, frame_payload(data), method, key);
}

Bytes extract_message(const RgbImage& stego, MethodId method,
                      const std::optional<StegoKey>& key) {
  require_key_for(method, key);
  const std::size_t capacity = capacity_bits(stego);
  if (capacity < kFrameHeaderBits)
    throw Error(ErrorCode::TruncatedHeader,
                "image holds " + std::to_string(capacity) +
                    " bits, fewer than the 32-bit length header");
  const auto header = extract_bits(stego, kFrameHeaderBits, method, key);
  const std::uint64_t body_bits = std::uint64_t{decode_frame_header(header)} * 8;
  if (body_bits > capacity - kFrameHeaderBits)
    throw Error(ErrorCode::TruncatedBody,
                "header declares " + std::to_string(body_bits / 8) +
                    " bytes but the image holds at most " +
                    std::to_string((capacity - kFrameHeaderBits) / 8));
  const auto frame =
      extract_bits(stego, kFrameHeaderBits + static_cast<std::size_t>(body_bits), method, key);
  return bits_to_bytes(parse_frame(frame).body);
}

}  // namespace cyclesteg
