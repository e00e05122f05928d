#include "referee/bits.hpp"

namespace referee {

bool Message::bit(std::size_t index) const {
  if (index >= bit_count_) throw BitError("bit index out of range");
  return (bytes_[index / 8] >> (7 - index % 8)) & 1u;
}

void Message::push_back(bool bit) {
  if (bit_count_ % 8 == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - bit_count_ % 8));
  ++bit_count_;
}

void Message::append_uint(std::uint64_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) {
    throw BitError("value " + std::to_string(value) + " does not fit in " + std::to_string(width) +
                   " bits");
  }
  for (std::size_t i = width; i > 0; --i) push_back(i - 1 < 64 && ((value >> (i - 1)) & 1u));
}

void Message::append(const Message& other) {
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other.bit(i));
}

std::string Message::to_hex() const {
  if (empty()) return "-";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0xf];
  }
  return out;
}

Message Message::from_hex(std::string_view hex, std::size_t bits) {
  Message m;
  if (hex == "-") {
    if (bits != 0) throw BitError("empty payload for a non-empty message");
    return m;
  }
  if (hex.size() != 2 * ((bits + 7) / 8) || bits == 0) {
    throw BitError("hex payload length does not match bit count");
  }
  auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    throw BitError(std::string("invalid hex digit '") + c + "'");
  };
  for (std::size_t i = 0; i < bits; ++i) {
    const unsigned byte = nibble(hex[2 * (i / 8)]) << 4 | nibble(hex[2 * (i / 8) + 1]);
    m.push_back((byte >> (7 - i % 8)) & 1u);
  }
  // Padding bits must be zero or the round trip would not be exact.
  if (m.to_hex() != hex) throw BitError("non-zero padding bits in hex payload");
  return m;
}

bool BitReader::read_bit() {
  if (position_ >= message_.size()) throw BitError("read past end of message");
  return message_.bit(position_++);
}

std::uint64_t BitReader::read_uint(std::size_t width) {
  if (width > 64) throw BitError("field wider than 64 bits");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < width; ++i) value = value << 1 | (read_bit() ? 1u : 0u);
  return value;
}

Message BitReader::read_bits(std::size_t count) {
  Message out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(read_bit());
  return out;
}

namespace {

void append_gamma(Message& m, std::uint64_t value) {  // value >= 1
  const std::size_t len = bits_for(value);
  for (std::size_t i = 1; i < len; ++i) m.push_back(false);
  m.append_uint(value, len);
}

std::uint64_t read_gamma(BitReader& r) {
  std::size_t zeros = 0;
  while (!r.read_bit()) {
    if (++zeros >= 64) throw BitError("malformed Elias-gamma prefix");
  }
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < zeros; ++i) value = value << 1 | (r.read_bit() ? 1u : 0u);
  return value;
}

}  // namespace

Message pack_parts(std::span<const Message> parts, const std::size_t* fixed_part_bits) {
  Message out;
  for (const Message& part : parts) {
    if (fixed_part_bits) {
      if (part.size() != *fixed_part_bits) throw BitError("part length differs from the fixed width");
    } else {
      append_gamma(out, part.size() + 1);
    }
    out.append(part);
  }
  return out;
}

std::vector<Message> unpack_parts(const Message& packed, std::size_t count,
                                  const std::size_t* fixed_part_bits) {
  BitReader reader(packed);
  std::vector<Message> parts;
  parts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t len = fixed_part_bits ? *fixed_part_bits : read_gamma(reader) - 1;
    if (len > reader.remaining()) throw BitError("part runs past end of message");
    parts.push_back(reader.read_bits(len));
  }
  if (reader.remaining() != 0) throw BitError("trailing bits after last part");
  return parts;
}

std::size_t bits_for(std::uint64_t n) {
  std::size_t width = 0;
  while (width < 64 && (n >> width) != 0) ++width;
  return width;
}

}  // namespace referee
