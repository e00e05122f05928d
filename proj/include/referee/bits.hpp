#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace referee {

class BitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite bit string: what one node sends to the referee.
///
/// Bits are packed MSB-first into bytes; unused low bits of the final byte are
/// always zero, so byte-wise equality is bit-string equality.
class Message {
 public:
  Message() = default;

  std::size_t size() const { return bit_count_; }
  bool empty() const { return bit_count_ == 0; }
  bool bit(std::size_t index) const;

  void push_back(bool bit);
  /// Appends `value` big-endian in exactly `width` bits; throws BitError if it
  /// does not fit.
  void append_uint(std::uint64_t value, std::size_t width);
  void append(const Message& other);

  /// Lowercase hex of the packed bytes, or "-" for the empty message.
  std::string to_hex() const;
  static Message from_hex(std::string_view hex, std::size_t bits);

  friend bool operator==(const Message&, const Message&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bit_count_ = 0;
};

/// Sequential reader over a Message.
class BitReader {
 public:
  explicit BitReader(const Message& message) : message_(message) {}

  bool read_bit();
  std::uint64_t read_uint(std::size_t width);
  Message read_bits(std::size_t count);
  std::size_t remaining() const { return message_.size() - position_; }

 private:
  const Message& message_;
  std::size_t position_ = 0;
};

/// Concatenates messages. With `fixed_part_bits` every part must have that
/// length and the parts are glued as-is; otherwise each part is preceded by
/// the Elias-gamma code of (length + 1) so it can be split again.
Message pack_parts(std::span<const Message> parts, const std::size_t* fixed_part_bits);
std::vector<Message> unpack_parts(const Message& packed, std::size_t count,
                                  const std::size_t* fixed_part_bits);

/// ceil(log2(n + 1)): bits needed for any value in 0..n.
std::size_t bits_for(std::uint64_t n);

}  // namespace referee
