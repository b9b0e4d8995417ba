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

#include "authenc/session.hpp"

#include <algorithm>

namespace authenc {

std::string_view to_string(SessionStatus s) { return s == SessionStatus::Active ? "active" : "cancelled"; }
std::string_view to_string(ErrorKind k) { return k == ErrorKind::InvalidFrame ? "InvalidFrame" : "Replay"; }
std::string_view to_string(Direction d) { return d == Direction::Inbound ? "inbound" : "outbound"; }

Bytes serialize_frame(const Frame& f) {
  if (f.pn > kMaxPacketNumber) throw std::invalid_argument("frame: packet number exceeds 48 bits");
  if (f.adata.size() > 0xffff) throw std::invalid_argument("frame: header too long");
  Bytes out;
  out.reserve(8 + f.adata.size() + f.ciphertext.size());
  for (int i = 5; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(f.pn >> (8 * i)));
  out.push_back(static_cast<std::uint8_t>(f.adata.size() >> 8));
  out.push_back(static_cast<std::uint8_t>(f.adata.size()));
  out.insert(out.end(), f.adata.begin(), f.adata.end());
  out.insert(out.end(), f.ciphertext.begin(), f.ciphertext.end());
  return out;
}

Frame parse_frame(std::span<const std::uint8_t> wire) {
  if (wire.size() < 8) throw std::invalid_argument("frame: truncated header");
  Frame f;
  for (std::size_t i = 0; i < 6; ++i) f.pn = f.pn << 8 | wire[i];
  const std::size_t alen = static_cast<std::size_t>(wire[6]) << 8 | wire[7];
  if (wire.size() < 8 + alen) throw std::invalid_argument("frame: truncated header data");
  f.adata.assign(wire.begin() + 8, wire.begin() + 8 + static_cast<std::ptrdiff_t>(alen));
  f.ciphertext.assign(wire.begin() + 8 + static_cast<std::ptrdiff_t>(alen), wire.end());
  return f;
}

Session::Session(CipherKey key, CcmParams params, SessionPolicy policy)
    : key_(std::move(key)), cipher_(make_cipher(key_)), params_(params), policy_(policy) {
  params_.check();
  if (params_.nonce_len < 6) throw SessionError("nonce too short for a 48-bit packet number");
}

Bytes Session::nonce_for(std::uint64_t pn, const CcmParams& params) {
  Bytes nonce(params.nonce_len, 0);
  for (std::size_t i = 0; i < 8 && i < nonce.size(); ++i)
    nonce[nonce.size() - 1 - i] = static_cast<std::uint8_t>(pn >> (8 * i));
  return nonce;
}

Frame Session::send(std::span<const std::uint8_t> header, std::span<const std::uint8_t> payload) {
  if (status_ == SessionStatus::Cancelled) throw SessionError("session cancelled; rekey required");
  if (send_pn_ > std::min(policy_.max_pn, kMaxPacketNumber)) throw SessionError("packet numbers exhausted; rekey required");
  Frame f;
  f.pn = send_pn_++;
  f.adata.assign(header.begin(), header.end());
  f.ciphertext = ccm_encrypt(*cipher_, params_, nonce_for(f.pn, params_), header, payload);
  return f;
}

void Session::record(std::uint64_t pn, ErrorKind kind) {
  log_.push_back({clock_++, pn, kind, Direction::Inbound});
}

std::optional<Bytes> Session::receive(const Frame& f) {
  if (status_ == SessionStatus::Cancelled) throw SessionError("session cancelled; rekey required");
  if (policy_.check_replay && last_accepted_pn_ && f.pn <= *last_accepted_pn_) {
    record(f.pn, ErrorKind::Replay);
    return std::nullopt;
  }
  std::optional<Bytes> payload;
  if (f.pn <= kMaxPacketNumber && f.adata.size() <= kMaxCcmAdata)
    payload = ccm_decrypt(*cipher_, params_, nonce_for(f.pn, params_), f.adata, f.ciphertext);
  if (!payload) {
    record(f.pn, ErrorKind::InvalidFrame);
    if (++consecutive_failures_ > policy_.retry_limit) status_ = SessionStatus::Cancelled;
    return std::nullopt;
  }
  last_accepted_pn_ = last_accepted_pn_ ? std::max(*last_accepted_pn_, f.pn) : f.pn;
  consecutive_failures_ = 0;
  return payload;
}

void Session::rekey(std::span<const std::uint8_t> fresh_randomness) {
  if (fresh_randomness.size() < 16) throw SessionError("rekey needs at least 16 bytes of randomness");
  key_ = CipherKey::aes128(Bytes(fresh_randomness.begin(), fresh_randomness.begin() + 16));
  cipher_ = make_cipher(key_);
  send_pn_ = 0;
  last_accepted_pn_.reset();
  consecutive_failures_ = 0;
  status_ = SessionStatus::Active;
}

AuditSummary audit(std::span<const ErrorEvent> log) {
  AuditSummary s;
  s.counts[ErrorKind::InvalidFrame] = 0;
  s.counts[ErrorKind::Replay] = 0;
  for (const auto& e : log) {
    ++s.total;
    ++s.counts[e.kind];
    ++s.per_pn[e.pn];
    s.first_timestamp = s.first_timestamp ? std::min(*s.first_timestamp, e.timestamp) : e.timestamp;
    s.last_timestamp = s.last_timestamp ? std::max(*s.last_timestamp, e.timestamp) : e.timestamp;
  }
  return s;
}

}  // namespace authenc
