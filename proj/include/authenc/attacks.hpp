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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "authenc/oracle.hpp"
#include "authenc/session.hpp"

namespace authenc {

enum class AttackStatus { Success, Inconclusive, Failed };

std::string_view to_string(AttackStatus status);

struct AttackResult {
  std::string attack;
  std::optional<SchemeParams> config;  // absent for session attacks
  BitString recovered;
  std::size_t queries_used = 0;
  AttackStatus status = AttackStatus::Inconclusive;
  std::vector<Symbol> transcript;
};

/// Downgrades Success to Failed when the recovered bits differ from the
/// known plaintext. Other statuses are left alone.
void grade(AttackResult& result, const BitString& truth);

/// Turns `known_old` at T-offset `offset` into `desired_new` without the key.
/// For OTP and CTR the flip lands exactly; for CBC the mask goes on the
/// preceding ciphertext block (or the IV), which garbles that block.
/// Throws std::invalid_argument on length mismatch, out-of-range offsets, or
/// a CBC target that straddles a block boundary.
WireMessage attack_semantic_flip(const WireMessage& w, CipherMode cipher, std::size_t offset,
                                 const BitString& known_old, const BitString& desired_new);

/// One query per bit: flip both bits of the pair. ACCEPT means the bit was 1.
/// Needs an EncK configuration over OTP or CTR; otherwise Failed.
AttackResult attack_enck_bits(Oracle& oracle, const WireMessage& w, const std::vector<std::size_t>& bit_indices);

/// Flip the first bit of the pair; ACCEPT means 0. Otherwise flip the second
/// bit instead; ACCEPT means 0, rejection means 1. At most two queries per
/// bit. Needs an EncI configuration over OTP or CTR; otherwise Failed.
AttackResult attack_enci_bits(Oracle& oracle, const WireMessage& w, const std::vector<std::size_t>& bit_indices);

/// Recovers CBC + Pad3 plaintext from a leaky receiver by steering the
/// declared length so that only a zero tail of a chosen block validates,
/// then sweeping one mask byte at a time. `known_len` is the plaintext bit
/// length the attacker is assumed to know. At most 4080 queries per block
/// plus one calibration query. Inconclusive without querying when the
/// receiver is strict, the cipher is not CBC, or the ciphertext cannot be a
/// Pad3 text of `known_len` bits.
AttackResult attack_padding_oracle(Oracle& oracle, const WireMessage& w, std::size_t known_len);

/// Re-delivers a captured frame. Success means the receiver accepted it.
AttackResult attack_replay(Session& receiver, const Frame& captured);

/// Helper: 0, 1, ..., n-1.
std::vector<std::size_t> all_bits(std::size_t n);

struct MatrixRow {
  SchemeOrder order;
  FormatRule rule;
  std::string attack;
  std::size_t trials = 0;
  std::size_t bits_targeted = 0;
  std::size_t bits_recovered = 0;  // bits of Success trials, all checked against the plaintext
  std::size_t failed = 0;          // trials that claimed success but were wrong
  std::size_t queries = 0;
  std::size_t manipulations = 0;
  std::size_t forged_accepts = 0;  // random manipulations the receiver accepted
  bool secure = false;
  bool expected_secure = false;

  bool matches() const { return secure == expected_secure && failed == 0; }
};

struct MatrixOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 10;
  std::size_t plaintext_bits = 64;
  std::size_t manipulations = 10000;
  std::size_t tag_bits = 64;
};

/// The order-of-operations table: each of the four orders under EncK and
/// EncI, attacked with the matching bit attack over OTP and a leaky receiver.
std::vector<MatrixRow> run_matrix(const MatrixOptions& options = {});

}  // namespace authenc
