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

#include "authenc/modes.hpp"

#include <algorithm>

namespace authenc {

namespace {

void require_whole_blocks(const BlockCipher& cipher, const BitString& data, const char* what) {
  if (data.size() % cipher.block_bits() != 0)
    throw LengthError(std::string(what) + ": input is not a whole number of blocks");
}

void xor_into(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

}  // namespace

BitString cbc_encrypt(const BlockCipher& cipher, const BitString& iv, const BitString& data) {
  require_whole_blocks(cipher, data, "cbc_encrypt");
  if (iv.size() != cipher.block_bits()) throw LengthError("cbc_encrypt: IV must be one block");
  const std::size_t n = cipher.block_bytes();
  Bytes out = data.bytes();
  Bytes chain = iv.bytes();
  Bytes tmp(n);
  for (std::size_t off = 0; off < out.size(); off += n) {
    std::span<std::uint8_t> blk(out.data() + off, n);
    xor_into(blk, chain);
    cipher.encrypt(blk, tmp);
    std::copy(tmp.begin(), tmp.end(), blk.begin());
    chain = tmp;
  }
  return BitString::from_bytes(out);
}

BitString cbc_decrypt(const BlockCipher& cipher, const BitString& iv, const BitString& data) {
  require_whole_blocks(cipher, data, "cbc_decrypt");
  if (iv.size() != cipher.block_bits()) throw LengthError("cbc_decrypt: IV must be one block");
  const std::size_t n = cipher.block_bytes();
  const Bytes& in = data.bytes();
  Bytes out(in.size());
  Bytes chain = iv.bytes();
  for (std::size_t off = 0; off < in.size(); off += n) {
    std::span<const std::uint8_t> blk(in.data() + off, n);
    std::span<std::uint8_t> dst(out.data() + off, n);
    cipher.decrypt(blk, dst);
    xor_into(dst, chain);
    chain.assign(blk.begin(), blk.end());
  }
  return BitString::from_bytes(out);
}

Block increment_counter(const Block& ctr) {
  Block out = ctr;
  for (std::size_t i = kBlockBytes; i-- > kBlockBytes - 4;) {
    if (++out[i] != 0) break;
  }
  return out;
}

std::vector<Block> ctr_keystream(const BlockCipher& cipher, const Block& ctr0, std::size_t n) {
  if (cipher.block_bytes() != kBlockBytes) throw LengthError("ctr_keystream: 128-bit cipher required");
  std::vector<Block> out;
  out.reserve(n);
  Block ctr = ctr0;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(cipher.encrypt_block(ctr));
    ctr = increment_counter(ctr);
  }
  return out;
}

BitString ctr_crypt(const BlockCipher& cipher, const Block& ctr0, const BitString& s) {
  const std::size_t nblocks = (s.size() + kBlockBits - 1) / kBlockBits;
  BitString stream = join_blocks(ctr_keystream(cipher, ctr0, nblocks));
  return xor_bits(s, stream.prefix(s.size()));
}

BitString otp_crypt(const Pad& pad, const BitString& s) {
  if (pad.bits.size() < s.size()) throw LengthError("otp_crypt: pad shorter than message");
  return xor_bits(s, pad.bits.prefix(s.size()));
}

BitString cbc_mac(const BlockCipher& cipher, const BitString& data, std::size_t tag_bits) {
  require_whole_blocks(cipher, data, "cbc_mac");
  const std::size_t width = cipher.block_bits();
  if (tag_bits > width || tag_bits < std::min<std::size_t>(32, width))
    throw std::invalid_argument("cbc_mac: tag length out of range");
  const std::size_t n = cipher.block_bytes();
  Bytes chain(n, 0);
  Bytes tmp(n);
  const Bytes& in = data.bytes();
  for (std::size_t off = 0; off < in.size(); off += n) {
    xor_into(chain, std::span<const std::uint8_t>(in.data() + off, n));
    cipher.encrypt(chain, tmp);
    chain = tmp;
  }
  return BitString::from_bytes(chain).prefix(tag_bits);
}

bool tags_equal(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) return false;
  std::uint8_t diff = 0;
  for (std::size_t i = 0; i < a.bytes().size(); ++i) diff |= a.bytes()[i] ^ b.bytes()[i];
  return diff == 0;
}

}  // namespace authenc
