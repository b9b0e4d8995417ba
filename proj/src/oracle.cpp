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

#include "authenc/oracle.hpp"

namespace authenc {

std::string_view to_string(OracleMode mode) { return mode == OracleMode::Leaky ? "leaky" : "strict"; }

std::string_view to_string(Symbol symbol) {
  switch (symbol) {
    case Symbol::Accept: return "ACCEPT";
    case Symbol::Invalid: return "INVALID";
    case Symbol::MacFailure: return "MAC_FAILURE";
    case Symbol::Reject: return "REJECT";
  }
  return "?";
}

std::optional<OracleMode> parse_oracle_mode(std::string_view token) {
  if (token == "leaky") return OracleMode::Leaky;
  if (token == "strict") return OracleMode::Strict;
  return std::nullopt;
}

Observation Oracle::query(const WireMessage& w) {
  WorkMeter meter;
  const bool leaky = mode_ == OracleMode::Leaky;
  const auto outcome = scheme_.unprotect(w, leaky ? Evaluation::ShortCircuit : Evaluation::Exhaustive, &meter);

  Observation obs;
  obs.cost = meter.units();
  obs.query_index = queries_++;
  switch (outcome.kind) {
    case UnprotectOutcome::Kind::Accept: obs.symbol = Symbol::Accept; break;
    case UnprotectOutcome::Kind::Invalid: obs.symbol = leaky ? Symbol::Invalid : Symbol::Reject; break;
    case UnprotectOutcome::Kind::MacFailure: obs.symbol = leaky ? Symbol::MacFailure : Symbol::Reject; break;
  }
  return obs;
}

}  // namespace authenc
