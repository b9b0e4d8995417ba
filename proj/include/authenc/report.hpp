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

#include <span>
#include <string>
#include <vector>

#include "authenc/attacks.hpp"
#include "authenc/session.hpp"
#include "json.hpp"

namespace authenc {

// Key order is kept as written so reports diff cleanly.
using Json = nlohmann::ordered_json;

/// {"hex": ..., "bits": n}; the hex is zero-padded to a whole byte.
Json to_json(const BitString& s);
BitString bits_from_json(const Json& j);

/// {"order", "rule", "cipher", "tag_bits"}. Keys are never written.
Json to_json(const SchemeParams& p);

/// {"iv": BitString|null, "pad_index": n|null, "body": BitString}
Json to_json(const WireMessage& w);
WireMessage wire_from_json(const Json& j);

/// FNV-1a (64-bit) over the symbol tokens, each followed by '\n'.
std::string transcript_digest(std::span<const Symbol> transcript);

/// {"attack", "config", "queries_used", "status", "recovered_hex",
///  "recovered_bits", "transcript_digest"}
Json to_json(const AttackResult& r);

Json to_json(const MatrixRow& row);
Json to_json(std::span<const MatrixRow> rows);

/// {"timestamp", "pn", "kind", "direction"}
Json to_json(const ErrorEvent& e);
std::vector<ErrorEvent> error_log_from_json(const Json& j);

/// {"total", "counts": {"InvalidFrame": n, "Replay": n},
///  "first_timestamp", "last_timestamp", "per_pn": {"<pn>": n}}
Json to_json(const AuditSummary& s);

}  // namespace authenc
