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

#include "authenc/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace authenc {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

ErrorKind parse_error_kind(const std::string& s) {
  if (s == to_string(ErrorKind::InvalidFrame)) return ErrorKind::InvalidFrame;
  if (s == to_string(ErrorKind::Replay)) return ErrorKind::Replay;
  throw std::invalid_argument("unknown error kind: " + s);
}

Direction parse_direction(const std::string& s) {
  if (s == to_string(Direction::Inbound)) return Direction::Inbound;
  if (s == to_string(Direction::Outbound)) return Direction::Outbound;
  throw std::invalid_argument("unknown direction: " + s);
}

}  // namespace

Json to_json(const BitString& s) { return {{"hex", s.to_hex()}, {"bits", s.size()}}; }

BitString bits_from_json(const Json& j) {
  return BitString::from_hex(j.at("hex").get<std::string>(), j.at("bits").get<std::size_t>());
}

Json to_json(const SchemeParams& p) {
  return {{"order", to_string(p.order)},
          {"rule", to_string(p.rule)},
          {"cipher", to_string(p.cipher)},
          {"tag_bits", p.tag_bits}};
}

Json to_json(const WireMessage& w) {
  return {{"iv", w.iv ? to_json(*w.iv) : Json(nullptr)},
          {"pad_index", optional_json(w.pad_index)},
          {"body", to_json(w.body)}};
}

WireMessage wire_from_json(const Json& j) {
  WireMessage w;
  if (j.contains("iv") && !j.at("iv").is_null()) w.iv = bits_from_json(j.at("iv"));
  if (j.contains("pad_index") && !j.at("pad_index").is_null()) w.pad_index = j.at("pad_index").get<std::uint64_t>();
  w.body = bits_from_json(j.at("body"));
  return w;
}

std::string transcript_digest(std::span<const Symbol> transcript) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](char c) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  };
  for (auto s : transcript) {
    for (char c : to_string(s)) mix(c);
    mix('\n');
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const AttackResult& r) {
  return {{"attack", r.attack},
          {"config", r.config ? to_json(*r.config) : Json(nullptr)},
          {"queries_used", r.queries_used},
          {"status", to_string(r.status)},
          {"recovered_hex", r.recovered.to_hex()},
          {"recovered_bits", r.recovered.size()},
          {"transcript_digest", transcript_digest(r.transcript)}};
}

Json to_json(const MatrixRow& row) {
  return {{"order", to_string(row.order)},
          {"rule", to_string(row.rule)},
          {"attack", row.attack},
          {"trials", row.trials},
          {"bits_targeted", row.bits_targeted},
          {"bits_recovered", row.bits_recovered},
          {"failed", row.failed},
          {"queries", row.queries},
          {"manipulations", row.manipulations},
          {"forged_accepts", row.forged_accepts},
          {"verdict", row.secure ? "secure" : "insecure"},
          {"expected", row.expected_secure ? "secure" : "insecure"},
          {"matches", row.matches()}};
}

Json to_json(std::span<const MatrixRow> rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

Json to_json(const ErrorEvent& e) {
  return {{"timestamp", e.timestamp},
          {"pn", e.pn},
          {"kind", to_string(e.kind)},
          {"direction", to_string(e.direction)}};
}

std::vector<ErrorEvent> error_log_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("error log must be a JSON array");
  std::vector<ErrorEvent> out;
  for (const auto& e : j) {
    out.push_back({e.at("timestamp").get<std::uint64_t>(), e.at("pn").get<std::uint64_t>(),
                   parse_error_kind(e.at("kind").get<std::string>()),
                   parse_direction(e.value("direction", std::string(to_string(Direction::Inbound))))});
  }
  return out;
}

Json to_json(const AuditSummary& s) {
  Json counts = Json::object();
  for (auto [kind, n] : s.counts) counts[std::string(to_string(kind))] = n;
  Json per_pn = Json::object();
  for (auto [pn, n] : s.per_pn) per_pn[std::to_string(pn)] = n;
  return {{"total", s.total},
          {"counts", counts},
          {"first_timestamp", optional_json(s.first_timestamp)},
          {"last_timestamp", optional_json(s.last_timestamp)},
          {"per_pn", per_pn}};
}

}  // namespace authenc
