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
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "authenc/bitstring.hpp"
#include "authenc/cipher.hpp"

namespace authenc {

/// Counter with CBC-MAC (NIST SP 800-38C) over a 128-bit block cipher.
///
/// One key serves both CTR encryption and the CBC-MAC. The tag is masked
/// with S_0 = E(Ctr_0); payload encryption starts at Ctr_1. Only the 2-byte
/// associated-data length encoding is supported.

class CcmError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Associated data must be shorter than 2^16 - 2^8 bytes.
inline constexpr std::size_t kMaxCcmAdata = 0xff00 - 1;

struct CcmParams {
  std::size_t nonce_len = 13;  // n, 7..13 bytes
  std::size_t tag_len = 8;     // t, even, 4..16 bytes

  /// Bytes of the payload-length field.
  std::size_t q() const { return 15 - nonce_len; }
  /// Throws CcmError if n or t are out of range.
  void check() const;

  friend bool operator==(const CcmParams&, const CcmParams&) = default;
};

/// B_0 || encoded adata || payload, each zero-padded to a block boundary.
std::vector<Block> ccm_format(const CcmParams& params, std::span<const std::uint8_t> nonce,
                              std::span<const std::uint8_t> adata, std::span<const std::uint8_t> payload);

/// Ctr_i = flags(q - 1) || nonce || [i] in q bytes.
Block ccm_counter_block(const CcmParams& params, std::span<const std::uint8_t> nonce, std::uint64_t index);

/// Returns payload ciphertext || masked tag.
Bytes ccm_encrypt(const BlockCipher& cipher, const CcmParams& params, std::span<const std::uint8_t> nonce,
                  std::span<const std::uint8_t> adata, std::span<const std::uint8_t> payload);

/// Returns the payload, or std::nullopt (INVALID) for any defect: bad tag,
/// short input, wrong adata. The full CTR decryption and MAC recomputation
/// always run. Parameter errors (bad nonce length etc.) still throw.
std::optional<Bytes> ccm_decrypt(const BlockCipher& cipher, const CcmParams& params,
                                 std::span<const std::uint8_t> nonce, std::span<const std::uint8_t> adata,
                                 std::span<const std::uint8_t> ciphertext);

namespace detail {

/// Test hook: masks the tag with S_i for the given counter index instead of
/// S_0. Index 0 is the standard construction.
Bytes ccm_encrypt_masked_with(const BlockCipher& cipher, const CcmParams& params,
                              std::span<const std::uint8_t> nonce, std::span<const std::uint8_t> adata,
                              std::span<const std::uint8_t> payload, std::uint64_t mask_index);
std::optional<Bytes> ccm_decrypt_masked_with(const BlockCipher& cipher, const CcmParams& params,
                                             std::span<const std::uint8_t> nonce,
                                             std::span<const std::uint8_t> adata,
                                             std::span<const std::uint8_t> ciphertext, std::uint64_t mask_index);

}  // namespace detail

// Line-oriented vector files:
//
//   # comment
//   Key = 404142434445464748494a4b4c4d4e4f
//   Nonce = 10111213141516
//   Adata = 0001020304050607
//   Payload = 20212223
//   CT = 7162015b4dac255d
//
// A record is complete once CT is read; the tag length is |CT| - |Payload|.
// Lines of the form "[...]" and unknown keys such as "Count" are ignored.
struct CcmVector {
  std::size_t line = 0;  // line of the CT entry
  Bytes key, nonce, adata, payload, ct;
};

/// Throws std::runtime_error with a line number on malformed input.
std::vector<CcmVector> parse_ccm_vectors(std::istream& in);

struct CcmVectorResult {
  bool encrypt_ok = false;
  bool decrypt_ok = false;
  std::string detail;
  bool passed() const { return encrypt_ok && decrypt_ok; }
};

/// Checks the vector in both directions with AES-128.
CcmVectorResult run_ccm_vector(const CcmVector& v);

}  // namespace authenc
