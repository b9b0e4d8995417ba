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

#include <cstddef>
#include <vector>

#include "authenc/bitstring.hpp"
#include "authenc/cipher.hpp"

namespace authenc {

// CBC over whole blocks of the cipher's width. `iv` must be one block.
//   C_i = E(P_i ^ C_{i-1}),  C_0 = iv
BitString cbc_encrypt(const BlockCipher& cipher, const BitString& iv, const BitString& data);
BitString cbc_decrypt(const BlockCipher& cipher, const BitString& iv, const BitString& data);

/// Increments the rightmost 32 bits as a big-endian integer, wrapping
/// within those 32 bits.
Block increment_counter(const Block& ctr);

/// Keystream blocks E(ctr0), E(ctr0 + 1), ..., n of them.
std::vector<Block> ctr_keystream(const BlockCipher& cipher, const Block& ctr0, std::size_t n);

/// XORs `s` with the leftmost s.size() keystream bits starting at ctr0.
BitString ctr_crypt(const BlockCipher& cipher, const Block& ctr0, const BitString& s);

/// One-time pad material. A pad may encipher at most one message; the
/// scheme layer's PadLedger enforces that.
struct Pad {
  BitString bits;
};

/// XOR with the pad's prefix. Throws LengthError if the pad is too short.
BitString otp_crypt(const Pad& pad, const BitString& s);

/// ISO/IEC 9797-1 MAC algorithm 1 without padding: CBC with a zero IV over
/// whole blocks, tag = leftmost `tag_bits` of the last chaining value.
/// An empty input yields the leftmost bits of the zero block.
BitString cbc_mac(const BlockCipher& cipher, const BitString& data, std::size_t tag_bits);

/// Constant-time equality for equal-length tags; lengths are public.
bool tags_equal(const BitString& a, const BitString& b);

}  // namespace authenc
