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
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "authenc/bitstring.hpp"
#include "authenc/cipher.hpp"
#include "authenc/formatting.hpp"
#include "authenc/modes.hpp"
#include "authenc/random.hpp"

namespace authenc {

/// Order in which formatting (F), authentication (A) and encryption (E)
/// are applied by the sender.
///
///   EncryptOnly  E(F(p))
///   AFE          E(F(p || A(p)))        MAC over the raw plaintext
///   FAE          E(T || A(T)), T = F(p) MAC over the formatted text
///   FEA          C || A(hdr || C), C = E(F(p))
enum class SchemeOrder { EncryptOnly, AFE, FAE, FEA };

enum class CipherMode { OTP, CBC, CTR };

std::string_view to_string(SchemeOrder order);
std::string_view to_string(CipherMode mode);
std::optional<SchemeOrder> parse_scheme_order(std::string_view token);
std::optional<CipherMode> parse_cipher_mode(std::string_view token);

/// The public part of a configuration: everything an attacker is assumed
/// to know.
struct SchemeParams {
  SchemeOrder order = SchemeOrder::FAE;
  FormatRule rule = FormatRule::Pad2;
  CipherMode cipher = CipherMode::CTR;
  std::size_t tag_bits = 64;

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

struct SchemeConfig {
  SchemeParams params;
  CipherKey mac_key;
  CipherKey enc_key;  // unused for OTP
};

/// Draws fresh AES-128 keys for `params`.
SchemeConfig make_config(const SchemeParams& params, Rng& rng);

/// Shared one-time-pad store. Pads are drawn from a seeded engine and handed
/// out exactly once for encryption; the receiver looks them up by index.
class PadLedger {
 public:
  class Exhausted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  explicit PadLedger(std::uint64_t seed, std::size_t capacity = std::size_t{1} << 20)
      : rng_(seed), capacity_(capacity) {}

  /// Generates a fresh pad of `nbits` and returns its index.
  std::uint64_t issue(std::size_t nbits);
  const Pad* find(std::uint64_t index) const;
  std::size_t issued() const { return pads_.size(); }

 private:
  Rng rng_;
  std::size_t capacity_;
  std::vector<Pad> pads_;
};

struct WireMessage {
  std::optional<BitString> iv;           // CBC IV or CTR initial counter block
  std::optional<std::uint64_t> pad_index;  // OTP only
  BitString body;

  friend bool operator==(const WireMessage&, const WireMessage&) = default;
};

struct UnprotectOutcome {
  enum class Kind { Accept, Invalid, MacFailure };

  Kind kind = Kind::Invalid;
  BitString plaintext;  // set only for Accept

  static UnprotectOutcome accept(BitString p) { return {Kind::Accept, std::move(p)}; }
  static UnprotectOutcome invalid() { return {Kind::Invalid, {}}; }
  static UnprotectOutcome mac_failure() { return {Kind::MacFailure, {}}; }

  bool accepted() const { return kind == Kind::Accept; }
  friend bool operator==(const UnprotectOutcome&, const UnprotectOutcome&) = default;
};

std::string_view to_string(UnprotectOutcome::Kind kind);

/// How much work the receiver does once the outcome is decided.
enum class Evaluation {
  ShortCircuit,  // stop at the first failing stage
  Exhaustive,    // always decrypt, validate and verify
};

/// A sender/receiver pair sharing one configuration and one pad ledger.
class Scheme {
 public:
  /// Throws std::invalid_argument for inconsistent configurations, e.g.
  /// CBC with a bit-pair encoding, or a tag outside [32, 128] bits.
  explicit Scheme(SchemeConfig config, std::uint64_t pad_seed = kDefaultSeed);

  const SchemeParams& params() const { return config_.params; }

  WireMessage protect(const BitString& plaintext, Rng& rng);

  /// Seals an already formatted text exactly as protect would after its
  /// formatting step, bypassing F. Lets a key holder build well-authenticated
  /// but ill-formatted messages.
  WireMessage protect_formatted(const BitString& formatted, Rng& rng);

  UnprotectOutcome unprotect(const WireMessage& w, Evaluation evaluation = Evaluation::Exhaustive,
                             WorkMeter* meter = nullptr) const;

  /// The keyed MAC A: CBC-MAC over the length-prefixed data.
  BitString authenticate(const BitString& data, const BlockCipher& mac_cipher) const;
  BitString authenticate(const BitString& data) const { return authenticate(data, *mac_cipher_); }

 private:
  WireMessage encrypt(const BitString& x, Rng& rng);
  std::optional<BitString> decrypt(const WireMessage& w, const BitString& ciphertext,
                                   const BlockCipher& enc) const;
  BitString wire_header(const WireMessage& w) const;

  SchemeConfig config_;
  std::unique_ptr<BlockCipher> mac_cipher_;
  std::unique_ptr<BlockCipher> enc_cipher_;
  PadLedger pads_;
};

}  // namespace authenc
