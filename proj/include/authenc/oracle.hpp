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
#include <string_view>

#include "authenc/scheme.hpp"

namespace authenc {

/// Leaky reports the exact receiver outcome and stops work at the first
/// failing stage. Strict always runs every stage and reports only
/// ACCEPT or REJECT.
enum class OracleMode { Leaky, Strict };

enum class Symbol { Accept, Invalid, MacFailure, Reject };

std::string_view to_string(OracleMode mode);
std::string_view to_string(Symbol symbol);
std::optional<OracleMode> parse_oracle_mode(std::string_view token);

struct Observation {
  Symbol symbol = Symbol::Reject;
  std::uint64_t cost = 0;  // block-cipher calls plus blocks validated
  std::uint64_t query_index = 0;

  bool accepted() const { return symbol == Symbol::Accept; }
};

/// What an attacker can tell apart: symbol and cost, not the query index.
inline bool same_response(const Observation& a, const Observation& b) {
  return a.symbol == b.symbol && a.cost == b.cost;
}

/// A receiver seen from outside. Holds the keys through the scheme; the
/// caller only learns the public parameters and the observations.
/// Plaintext is never revealed, even on ACCEPT.
class Oracle {
 public:
  Oracle(const Scheme& scheme, OracleMode mode) : scheme_(scheme), mode_(mode) {}

  Observation query(const WireMessage& w);

  OracleMode mode() const { return mode_; }
  const SchemeParams& params() const { return scheme_.params(); }
  std::uint64_t queries() const { return queries_; }

 private:
  const Scheme& scheme_;
  OracleMode mode_;
  std::uint64_t queries_ = 0;
};

}  // namespace authenc
