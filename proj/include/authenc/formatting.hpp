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

#include <optional>
#include <string_view>

#include "authenc/bitstring.hpp"
#include "authenc/random.hpp"

namespace authenc {

/// Formatting rules: the three ISO/IEC 9797-1 padding methods and two
/// bit-pair encodings.
///
///   Pad1  zero bits to the next 128-bit boundary (not injective)
///   Pad2  a single 1-bit, then zero bits to the boundary ("OZ" padding)
///   Pad3  a length block, the data, then zero bits to the boundary
///   EncK  0 -> 00, 1 -> 01 | 10 (random); 11 is invalid
///   EncI  0 -> 00 | 01 | 10 (random), 1 -> 11; every pair decodes
enum class FormatRule { Pad1, Pad2, Pad3, EncK, EncI };

std::string_view to_string(FormatRule rule);
std::optional<FormatRule> parse_format_rule(std::string_view token);

bool is_padding_rule(FormatRule rule);
bool is_injective(FormatRule rule);

struct FormattedText {
  FormatRule rule;
  BitString body;

  friend bool operator==(const FormattedText&, const FormattedText&) = default;
};

/// Applies the rule to `plaintext`. Only EncK and EncI draw from `rng`.
FormattedText format(FormatRule rule, const BitString& plaintext, Rng& rng);

/// Checks the body and recovers the plaintext; std::nullopt means INVALID.
/// Pad1 carries no redundancy and returns the padded body unchanged.
std::optional<BitString> validate(FormatRule rule, const BitString& body);
inline std::optional<BitString> validate(const FormattedText& t) { return validate(t.rule, t.body); }

/// Deterministic length-prefixed padding (the Pad3 layout). Used wherever
/// variable-length data must be fed to CBC-MAC.
BitString length_prefixed(const BitString& data);

}  // namespace authenc
