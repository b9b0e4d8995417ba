// Copyright 2026 The authenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace authenc {

using Bytes = std::vector<std::uint8_t>;

/// Raised when an operation's length or index precondition is violated.
class LengthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An arbitrary-length bit sequence.
///
/// Bit 0 is the most significant bit of the first byte. Storage is packed
/// into bytes; unused low-order bits of the final byte are always zero, so
/// two strings compare equal iff they hold the same bits.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t nbits);  // all zeros

  static BitString from_bytes(std::span<const std::uint8_t> bytes);
  static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);
  /// Lowercase or uppercase hex, even number of digits.
  static BitString from_hex(std::string_view hex);
  /// Hex for the packed bytes plus an explicit bit length (JSON form).
  static BitString from_hex(std::string_view hex, std::size_t nbits);
  /// Literal '0'/'1' characters; spaces are ignored.
  static BitString from_binary(std::string_view bits);

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }
  bool byte_aligned() const { return nbits_ % 8 == 0; }

  bool operator[](std::size_t i) const {
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u;
  }
  bool at(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  void push_back(bool bit);
  void append(const BitString& other);
  void append_zeros(std::size_t count);

  BitString slice(std::size_t pos, std::size_t len) const;
  BitString prefix(std::size_t len) const { return slice(0, len); }
  BitString suffix_from(std::size_t pos) const { return slice(pos, nbits_ - pos); }

  /// Packed bytes; the final byte is zero-padded when not byte aligned.
  const Bytes& bytes() const { return bytes_; }
  /// Throws LengthError unless byte aligned.
  Bytes to_bytes() const;
  /// Lowercase hex of the packed bytes.
  std::string to_hex() const;
  std::string to_binary() const;

  bool all_zero() const;
  std::size_t popcount() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  Bytes bytes_;
  std::size_t nbits_ = 0;
};

BitString operator+(BitString lhs, const BitString& rhs);

/// Bitwise XOR; throws LengthError on mismatched lengths.
BitString xor_bits(const BitString& a, const BitString& b);

/// Returns `s` with every listed position inverted.
BitString flip_bits(const BitString& s, std::span<const std::size_t> positions);
BitString flip_bits(const BitString& s, std::initializer_list<std::size_t> positions);

/// 128-bit cipher block.
inline constexpr std::size_t kBlockBytes = 16;
inline constexpr std::size_t kBlockBits = 128;
using Block = std::array<std::uint8_t, kBlockBytes>;

BitString to_bits(const Block& b);
Block to_block(const BitString& s);  // requires exactly 128 bits
Block xor_block(const Block& a, const Block& b);

std::vector<Block> split_blocks(const BitString& s);
BitString join_blocks(std::span<const Block> blocks);

std::string to_hex(std::span<const std::uint8_t> bytes);
Bytes from_hex(std::string_view hex);

}  // namespace authenc
