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
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "authenc/bitstring.hpp"
#include "authenc/ccm.hpp"
#include "authenc/cipher.hpp"

namespace authenc {

/// Packet numbers travel as a 6-byte header field.
inline constexpr std::uint64_t kMaxPacketNumber = (std::uint64_t{1} << 48) - 1;

enum class SessionStatus { Active, Cancelled };
enum class ErrorKind { InvalidFrame, Replay };
enum class Direction { Inbound, Outbound };

std::string_view to_string(SessionStatus s);
std::string_view to_string(ErrorKind k);
std::string_view to_string(Direction d);

struct ErrorEvent {
  std::uint64_t timestamp = 0;  // logical clock, one tick per event
  std::uint64_t pn = 0;
  ErrorKind kind = ErrorKind::InvalidFrame;
  Direction direction = Direction::Inbound;

  friend bool operator==(const ErrorEvent&, const ErrorEvent&) = default;
};

struct Frame {
  std::uint64_t pn = 0;
  Bytes adata;  // cleartext header, authenticated
  Bytes ciphertext;

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// pn (6 bytes, big endian) || adata length (2 bytes) || adata || ciphertext
Bytes serialize_frame(const Frame& f);
/// Throws std::invalid_argument on truncated input.
Frame parse_frame(std::span<const std::uint8_t> wire);

struct SessionPolicy {
  std::size_t retry_limit = 3;  // cancel once consecutive failures exceed this
  bool check_replay = true;     // only test fixtures turn this off
  std::uint64_t max_pn = kMaxPacketNumber;
};

class SessionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One endpoint of a CCM-protected channel with sequence-number nonces.
///
/// Not thread-safe: a Session has a single writer. Rejections surface to the
/// caller only as std::nullopt; the cause is recorded in the local error log.
class Session {
 public:
  explicit Session(CipherKey key, CcmParams params = {13, 8}, SessionPolicy policy = {});

  /// Throws SessionError when cancelled or when the packet-number space is
  /// exhausted (the caller must rekey).
  Frame send(std::span<const std::uint8_t> header, std::span<const std::uint8_t> payload);

  /// Returns the payload, or std::nullopt as the single opaque rejection.
  /// Throws SessionError when cancelled.
  std::optional<Bytes> receive(const Frame& f);

  /// Installs a key taken from caller-supplied randomness (at least 16
  /// bytes), resets both counters and reactivates the session. The error
  /// log survives.
  void rekey(std::span<const std::uint8_t> fresh_randomness);

  /// The nonce for packet number `pn`: big endian, right-aligned, zero-filled.
  static Bytes nonce_for(std::uint64_t pn, const CcmParams& params);

  SessionStatus status() const { return status_; }
  std::uint64_t send_pn() const { return send_pn_; }
  std::optional<std::uint64_t> last_accepted_pn() const { return last_accepted_pn_; }
  std::size_t consecutive_failures() const { return consecutive_failures_; }
  const std::vector<ErrorEvent>& error_log() const { return log_; }
  const CcmParams& params() const { return params_; }
  const CipherKey& key() const { return key_; }

 private:
  void record(std::uint64_t pn, ErrorKind kind);

  CipherKey key_;
  std::unique_ptr<BlockCipher> cipher_;
  CcmParams params_;
  SessionPolicy policy_;
  std::uint64_t send_pn_ = 0;
  std::optional<std::uint64_t> last_accepted_pn_;
  std::size_t consecutive_failures_ = 0;
  SessionStatus status_ = SessionStatus::Active;
  std::vector<ErrorEvent> log_;
  std::uint64_t clock_ = 0;
};

struct AuditSummary {
  std::size_t total = 0;
  std::map<ErrorKind, std::size_t> counts;  // every kind present, zero if absent
  std::optional<std::uint64_t> first_timestamp;
  std::optional<std::uint64_t> last_timestamp;
  std::map<std::uint64_t, std::size_t> per_pn;

  friend bool operator==(const AuditSummary&, const AuditSummary&) = default;
};

AuditSummary audit(std::span<const ErrorEvent> log);

}  // namespace authenc
