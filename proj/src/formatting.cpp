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

#include "authenc/formatting.hpp"

#include <stdexcept>

namespace authenc {

namespace {

std::size_t pad_to_block(std::size_t nbits) { return (kBlockBits - nbits % kBlockBits) % kBlockBits; }

BitString length_block(std::size_t nbits) {
  Block b{};
  auto v = static_cast<std::uint64_t>(nbits);
  for (std::size_t i = 0; i < 8; ++i) b[kBlockBytes - 1 - i] = static_cast<std::uint8_t>(v >> (8 * i));
  return to_bits(b);
}

std::optional<BitString> validate_pad2(const BitString& body) {
  if (body.empty() || body.size() % kBlockBits != 0) return std::nullopt;
  const std::size_t final_block = body.size() - kBlockBits;
  for (std::size_t i = body.size(); i-- > final_block;) {
    if (body[i]) return body.prefix(i);
  }
  return std::nullopt;
}

std::optional<BitString> validate_pad3(const BitString& body) {
  if (body.size() < kBlockBits || body.size() % kBlockBits != 0) return std::nullopt;
  const auto& bytes = body.bytes();
  for (std::size_t i = 0; i < 8; ++i)
    if (bytes[i] != 0) return std::nullopt;  // declared length >= 2^64 bits
  std::uint64_t declared = 0;
  for (std::size_t i = 8; i < kBlockBytes; ++i) declared = declared << 8 | bytes[i];
  const std::size_t data_bits = body.size() - kBlockBits;
  const std::uint64_t data_blocks = declared / kBlockBits + (declared % kBlockBits != 0 ? 1 : 0);
  if (data_blocks != data_bits / kBlockBits) return std::nullopt;
  BitString data = body.suffix_from(kBlockBits);
  for (std::size_t i = declared; i < data_bits; ++i)
    if (data[i]) return std::nullopt;
  return data.prefix(declared);
}

std::optional<BitString> validate_enck(const BitString& body) {
  if (body.size() % 2 != 0) return std::nullopt;
  BitString out;
  for (std::size_t i = 0; i < body.size(); i += 2) {
    const bool hi = body[i], lo = body[i + 1];
    if (hi && lo) return std::nullopt;
    out.push_back(hi || lo);
  }
  return out;
}

std::optional<BitString> validate_enci(const BitString& body) {
  if (body.size() % 2 != 0) return std::nullopt;
  BitString out;
  for (std::size_t i = 0; i < body.size(); i += 2) out.push_back(body[i] && body[i + 1]);
  return out;
}

}  // namespace

std::string_view to_string(FormatRule rule) {
  switch (rule) {
    case FormatRule::Pad1: return "pad1";
    case FormatRule::Pad2: return "pad2";
    case FormatRule::Pad3: return "pad3";
    case FormatRule::EncK: return "enck";
    case FormatRule::EncI: return "enci";
  }
  return "?";
}

std::optional<FormatRule> parse_format_rule(std::string_view token) {
  for (auto r : {FormatRule::Pad1, FormatRule::Pad2, FormatRule::Pad3, FormatRule::EncK, FormatRule::EncI})
    if (token == to_string(r)) return r;
  return std::nullopt;
}

bool is_padding_rule(FormatRule rule) {
  return rule == FormatRule::Pad1 || rule == FormatRule::Pad2 || rule == FormatRule::Pad3;
}

bool is_injective(FormatRule rule) { return rule != FormatRule::Pad1; }

BitString length_prefixed(const BitString& data) {
  BitString out = length_block(data.size());
  out.append(data);
  out.append_zeros(pad_to_block(data.size()));
  return out;
}

FormattedText format(FormatRule rule, const BitString& plaintext, Rng& rng) {
  BitString body;
  switch (rule) {
    case FormatRule::Pad1:
      body = plaintext;
      body.append_zeros(plaintext.empty() ? kBlockBits : pad_to_block(plaintext.size()));
      break;
    case FormatRule::Pad2:
      body = plaintext;
      body.push_back(true);
      body.append_zeros(pad_to_block(body.size()));
      break;
    case FormatRule::Pad3:
      // size_t lengths always fit the 128-bit length block.
      body = length_prefixed(plaintext);
      break;
    case FormatRule::EncK: {
      std::bernoulli_distribution coin(0.5);
      for (std::size_t i = 0; i < plaintext.size(); ++i) {
        if (!plaintext[i]) {
          body.push_back(false);
          body.push_back(false);
        } else {
          const bool first = coin(rng);
          body.push_back(first);
          body.push_back(!first);
        }
      }
      break;
    }
    case FormatRule::EncI: {
      std::uniform_int_distribution<int> pick(0, 2);
      for (std::size_t i = 0; i < plaintext.size(); ++i) {
        const int pair = plaintext[i] ? 3 : pick(rng);
        body.push_back(pair & 2);
        body.push_back(pair & 1);
      }
      break;
    }
  }
  return {rule, std::move(body)};
}

std::optional<BitString> validate(FormatRule rule, const BitString& body) {
  switch (rule) {
    case FormatRule::Pad1: return body;
    case FormatRule::Pad2: return validate_pad2(body);
    case FormatRule::Pad3: return validate_pad3(body);
    case FormatRule::EncK: return validate_enck(body);
    case FormatRule::EncI: return validate_enci(body);
  }
  return std::nullopt;
}

}  // namespace authenc
