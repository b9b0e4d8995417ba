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

#include "authenc/cipher.hpp"

#include <algorithm>
#include <stdexcept>

namespace authenc {

namespace {

constexpr std::array<std::uint8_t, 256> kSbox = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16};

constexpr std::array<std::uint8_t, 256> make_inverse(const std::array<std::uint8_t, 256>& s) {
  std::array<std::uint8_t, 256> inv{};
  for (std::size_t i = 0; i < 256; ++i) inv[s[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

constexpr auto kInvSbox = make_inverse(kSbox);

constexpr std::uint8_t xtime(std::uint8_t x) {
  return static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1b : 0x00));
}

constexpr std::uint8_t gmul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return r;
}

using State = std::array<std::uint8_t, 16>;  // column-major, state[r + 4c]

void add_round_key(State& s, const std::uint8_t* rk) {
  for (std::size_t i = 0; i < 16; ++i) s[i] ^= rk[i];
}

void sub_bytes(State& s, const std::array<std::uint8_t, 256>& box) {
  for (auto& b : s) b = box[b];
}

void shift_rows(State& s) {
  State t = s;
  for (std::size_t r = 1; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) s[r + 4 * c] = t[r + 4 * ((c + r) % 4)];
}

void inv_shift_rows(State& s) {
  State t = s;
  for (std::size_t r = 1; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) s[r + 4 * ((c + r) % 4)] = t[r + 4 * c];
}

void mix_columns(State& s) {
  for (std::size_t c = 0; c < 4; ++c) {
    std::uint8_t* col = &s[4 * c];
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = static_cast<std::uint8_t>(xtime(a0) ^ (xtime(a1) ^ a1) ^ a2 ^ a3);
    col[1] = static_cast<std::uint8_t>(a0 ^ xtime(a1) ^ (xtime(a2) ^ a2) ^ a3);
    col[2] = static_cast<std::uint8_t>(a0 ^ a1 ^ xtime(a2) ^ (xtime(a3) ^ a3));
    col[3] = static_cast<std::uint8_t>((xtime(a0) ^ a0) ^ a1 ^ a2 ^ xtime(a3));
  }
}

void inv_mix_columns(State& s) {
  for (std::size_t c = 0; c < 4; ++c) {
    std::uint8_t* col = &s[4 * c];
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = gmul(a0, 14) ^ gmul(a1, 11) ^ gmul(a2, 13) ^ gmul(a3, 9);
    col[1] = gmul(a0, 9) ^ gmul(a1, 14) ^ gmul(a2, 11) ^ gmul(a3, 13);
    col[2] = gmul(a0, 13) ^ gmul(a1, 9) ^ gmul(a2, 14) ^ gmul(a3, 11);
    col[3] = gmul(a0, 11) ^ gmul(a1, 13) ^ gmul(a2, 9) ^ gmul(a3, 14);
  }
}

void check_block(std::span<const std::uint8_t> in, std::span<std::uint8_t> out, std::size_t n) {
  if (in.size() != n || out.size() != n) throw LengthError("block cipher: wrong block size");
}

// PRESENT's 4-bit S-box.
constexpr std::array<std::uint8_t, 16> kToySbox = {0xc, 0x5, 0x6, 0xb, 0x9, 0x0, 0xa, 0xd,
                                                   0x3, 0xe, 0xf, 0x8, 0x4, 0x7, 0x1, 0x2};

constexpr std::array<std::uint8_t, 16> make_toy_inverse() {
  std::array<std::uint8_t, 16> inv{};
  for (std::uint8_t i = 0; i < 16; ++i) inv[kToySbox[i]] = i;
  return inv;
}

constexpr auto kToyInvSbox = make_toy_inverse();

std::uint16_t toy_sub(std::uint16_t x, const std::array<std::uint8_t, 16>& box) {
  std::uint16_t r = 0;
  for (int n = 0; n < 4; ++n) r |= static_cast<std::uint16_t>(box[(x >> (4 * n)) & 0xf] << (4 * n));
  return r;
}

// Bit i moves to position 4*(i%4) + i/4: a transpose of the 4x4 nibble grid.
std::uint16_t toy_permute(std::uint16_t x) {
  std::uint16_t r = 0;
  for (int i = 0; i < 16; ++i)
    if (x & (1u << i)) r |= static_cast<std::uint16_t>(1u << (4 * (i % 4) + i / 4));
  return r;
}

}  // namespace

std::string_view to_string(CipherId id) {
  switch (id) {
    case CipherId::Aes128: return "aes128";
    case CipherId::Toy16: return "toy16";
    case CipherId::Identity: return "identity";
  }
  return "?";
}

Block BlockCipher::encrypt_block(const Block& b) const {
  Block out{};
  encrypt(b, out);
  return out;
}

Block BlockCipher::decrypt_block(const Block& b) const {
  Block out{};
  decrypt(b, out);
  return out;
}

BitString BlockCipher::encrypt_block(const BitString& b) const {
  if (b.size() != block_bits()) throw LengthError("encrypt_block: wrong block size");
  Bytes out(block_bytes());
  encrypt(b.bytes(), out);
  return BitString::from_bytes(out);
}

BitString BlockCipher::decrypt_block(const BitString& b) const {
  if (b.size() != block_bits()) throw LengthError("decrypt_block: wrong block size");
  Bytes out(block_bytes());
  decrypt(b.bytes(), out);
  return BitString::from_bytes(out);
}

std::unique_ptr<BlockCipher> make_cipher(const CipherKey& key) {
  switch (key.id) {
    case CipherId::Aes128: return std::make_unique<Aes128>(key.key);
    case CipherId::Toy16: return std::make_unique<Toy16Cipher>(key.key);
    case CipherId::Identity:
      if (!key.key.empty()) throw std::invalid_argument("identity cipher takes no key");
      return std::make_unique<IdentityCipher>();
  }
  throw std::invalid_argument("unknown cipher");
}

Aes128::Aes128(std::span<const std::uint8_t> key) {
  if (key.size() != 16) throw std::invalid_argument("AES-128 requires a 16-byte key");
  std::copy(key.begin(), key.end(), round_keys_.begin());
  std::uint8_t rcon = 1;
  for (std::size_t i = 16; i < round_keys_.size(); i += 4) {
    std::array<std::uint8_t, 4> t = {round_keys_[i - 4], round_keys_[i - 3], round_keys_[i - 2],
                                     round_keys_[i - 1]};
    if (i % 16 == 0) {
      t = {static_cast<std::uint8_t>(kSbox[t[1]] ^ rcon), kSbox[t[2]], kSbox[t[3]], kSbox[t[0]]};
      rcon = xtime(rcon);
    }
    for (std::size_t j = 0; j < 4; ++j) round_keys_[i + j] = round_keys_[i + j - 16] ^ t[j];
  }
}

void Aes128::encrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
  check_block(in, out, 16);
  State s;
  std::copy(in.begin(), in.end(), s.begin());
  add_round_key(s, &round_keys_[0]);
  for (std::size_t round = 1; round < 10; ++round) {
    sub_bytes(s, kSbox);
    shift_rows(s);
    mix_columns(s);
    add_round_key(s, &round_keys_[16 * round]);
  }
  sub_bytes(s, kSbox);
  shift_rows(s);
  add_round_key(s, &round_keys_[160]);
  std::copy(s.begin(), s.end(), out.begin());
}

void Aes128::decrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
  check_block(in, out, 16);
  State s;
  std::copy(in.begin(), in.end(), s.begin());
  add_round_key(s, &round_keys_[160]);
  for (std::size_t round = 9; round >= 1; --round) {
    inv_shift_rows(s);
    sub_bytes(s, kInvSbox);
    add_round_key(s, &round_keys_[16 * round]);
    inv_mix_columns(s);
  }
  inv_shift_rows(s);
  sub_bytes(s, kInvSbox);
  add_round_key(s, &round_keys_[0]);
  std::copy(s.begin(), s.end(), out.begin());
}

Toy16Cipher::Toy16Cipher(std::span<const std::uint8_t> key) {
  if (key.size() != 4) throw std::invalid_argument("toy16 requires a 4-byte key");
  std::uint32_t k = static_cast<std::uint32_t>(key[0]) << 24 | static_cast<std::uint32_t>(key[1]) << 16 |
                    static_cast<std::uint32_t>(key[2]) << 8 | key[3];
  for (auto& rk : round_keys_) {
    rk = static_cast<std::uint16_t>(k >> 16);
    k = (k << 7 | k >> 25) ^ 0x9e37u;
  }
}

std::uint16_t Toy16Cipher::encrypt_word(std::uint16_t x) const {
  for (int r = 0; r < kRounds; ++r) {
    x ^= round_keys_[r];
    x = toy_sub(x, kToySbox);
    if (r + 1 < kRounds) x = toy_permute(x);
  }
  return x ^ round_keys_[kRounds];
}

std::uint16_t Toy16Cipher::decrypt_word(std::uint16_t x) const {
  x ^= round_keys_[kRounds];
  for (int r = kRounds - 1; r >= 0; --r) {
    if (r + 1 < kRounds) x = toy_permute(x);  // the transpose is its own inverse
    x = toy_sub(x, kToyInvSbox);
    x ^= round_keys_[r];
  }
  return x;
}

void Toy16Cipher::encrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
  check_block(in, out, 2);
  auto y = encrypt_word(static_cast<std::uint16_t>(in[0] << 8 | in[1]));
  out[0] = static_cast<std::uint8_t>(y >> 8);
  out[1] = static_cast<std::uint8_t>(y);
}

void Toy16Cipher::decrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
  check_block(in, out, 2);
  auto y = decrypt_word(static_cast<std::uint16_t>(in[0] << 8 | in[1]));
  out[0] = static_cast<std::uint8_t>(y >> 8);
  out[1] = static_cast<std::uint8_t>(y);
}

void IdentityCipher::encrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
  check_block(in, out, 16);
  std::copy(in.begin(), in.end(), out.begin());
}

void IdentityCipher::decrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
  check_block(in, out, 16);
  std::copy(in.begin(), in.end(), out.begin());
}

}  // namespace authenc
