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

#include "authenc/bitstring.hpp"

#include <algorithm>
#include <bit>

namespace authenc {

namespace {

std::size_t bytes_for(std::size_t nbits) { return (nbits + 7) / 8; }

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitString::BitString(std::size_t nbits) : bytes_(bytes_for(nbits), 0), nbits_(nbits) {}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  return from_bytes(bytes, bytes.size() * 8);
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
  if (bytes.size() != bytes_for(nbits))
    throw LengthError("BitString: byte count does not match bit length");
  BitString s;
  s.bytes_.assign(bytes.begin(), bytes.end());
  s.nbits_ = nbits;
  if (nbits % 8 != 0) s.bytes_.back() &= static_cast<std::uint8_t>(0xff << (8 - nbits % 8));
  return s;
}

BitString BitString::from_hex(std::string_view hex) {
  Bytes b = authenc::from_hex(hex);
  return from_bytes(b);
}

BitString BitString::from_hex(std::string_view hex, std::size_t nbits) {
  Bytes b = authenc::from_hex(hex);
  return from_bytes(b, nbits);
}

BitString BitString::from_binary(std::string_view bits) {
  BitString s;
  for (char c : bits) {
    if (c == ' ') continue;
    if (c != '0' && c != '1') throw std::invalid_argument("BitString: expected '0' or '1'");
    s.push_back(c == '1');
  }
  return s;
}

bool BitString::at(std::size_t i) const {
  if (i >= nbits_) throw LengthError("BitString: index out of range");
  return (*this)[i];
}

void BitString::set(std::size_t i, bool value) {
  if (i >= nbits_) throw LengthError("BitString: index out of range");
  const auto mask = static_cast<std::uint8_t>(0x80u >> (i & 7));
  if (value)
    bytes_[i >> 3] |= mask;
  else
    bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
}

void BitString::flip(std::size_t i) {
  if (i >= nbits_) throw LengthError("BitString: index out of range");
  bytes_[i >> 3] ^= static_cast<std::uint8_t>(0x80u >> (i & 7));
}

void BitString::push_back(bool bit) {
  if (nbits_ % 8 == 0) bytes_.push_back(0);
  ++nbits_;
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> ((nbits_ - 1) & 7));
}

void BitString::append(const BitString& other) {
  if (byte_aligned()) {
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    nbits_ += other.nbits_;
    return;
  }
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

void BitString::append_zeros(std::size_t count) {
  nbits_ += count;
  bytes_.resize(bytes_for(nbits_), 0);
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  if (pos > nbits_ || len > nbits_ - pos) throw LengthError("BitString: slice out of range");
  if (pos % 8 == 0) {
    auto first = bytes_.begin() + static_cast<std::ptrdiff_t>(pos / 8);
    Bytes b(first, first + static_cast<std::ptrdiff_t>(bytes_for(len)));
    return from_bytes(b, len);
  }
  BitString out;
  out.bytes_.reserve(bytes_for(len));
  for (std::size_t i = 0; i < len; ++i) out.push_back((*this)[pos + i]);
  return out;
}

Bytes BitString::to_bytes() const {
  if (!byte_aligned()) throw LengthError("BitString: not byte aligned");
  return bytes_;
}

std::string BitString::to_hex() const { return authenc::to_hex(bytes_); }

std::string BitString::to_binary() const {
  std::string out;
  out.reserve(nbits_);
  for (std::size_t i = 0; i < nbits_; ++i) out.push_back((*this)[i] ? '1' : '0');
  return out;
}

bool BitString::all_zero() const {
  for (auto b : bytes_)
    if (b != 0) return false;
  return true;
}

std::size_t BitString::popcount() const {
  std::size_t n = 0;
  for (auto b : bytes_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

BitString operator+(BitString lhs, const BitString& rhs) {
  lhs.append(rhs);
  return lhs;
}

BitString xor_bits(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw LengthError("xor_bits: length mismatch");
  Bytes out(a.bytes().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.bytes()[i] ^ b.bytes()[i];
  return BitString::from_bytes(out, a.size());
}

BitString flip_bits(const BitString& s, std::span<const std::size_t> positions) {
  BitString out = s;
  for (auto p : positions) out.flip(p);
  return out;
}

BitString flip_bits(const BitString& s, std::initializer_list<std::size_t> positions) {
  return flip_bits(s, std::span<const std::size_t>(positions.begin(), positions.size()));
}

BitString to_bits(const Block& b) { return BitString::from_bytes(b); }

Block to_block(const BitString& s) {
  if (s.size() != kBlockBits) throw LengthError("to_block: need exactly 128 bits");
  Block b{};
  std::copy(s.bytes().begin(), s.bytes().end(), b.begin());
  return b;
}

Block xor_block(const Block& a, const Block& b) {
  Block r{};
  for (std::size_t i = 0; i < kBlockBytes; ++i) r[i] = a[i] ^ b[i];
  return r;
}

std::vector<Block> split_blocks(const BitString& s) {
  if (s.size() % kBlockBits != 0) throw LengthError("split_blocks: length not a multiple of 128");
  std::vector<Block> out(s.size() / kBlockBits);
  for (std::size_t i = 0; i < out.size(); ++i)
    std::copy_n(s.bytes().begin() + static_cast<std::ptrdiff_t>(i * kBlockBytes), kBlockBytes,
                out[i].begin());
  return out;
}

BitString join_blocks(std::span<const Block> blocks) {
  Bytes b;
  b.reserve(blocks.size() * kBlockBytes);
  for (const auto& blk : blocks) b.insert(b.end(), blk.begin(), blk.end());
  return BitString::from_bytes(b);
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("from_hex: odd number of digits");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = hex_digit(hex[2 * i]);
    int lo = hex_digit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("from_hex: invalid digit");
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

}  // namespace authenc
