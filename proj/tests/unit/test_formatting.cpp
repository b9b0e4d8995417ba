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

#include <map>

#include "authenc/formatting.hpp"
#include "doctest.h"

using namespace authenc;

namespace {

constexpr FormatRule kAllRules[] = {FormatRule::Pad1, FormatRule::Pad2, FormatRule::Pad3, FormatRule::EncK,
                                    FormatRule::EncI};

BitString bits(std::string_view s) { return BitString::from_binary(s); }

BitString pad3_body(std::uint64_t declared, const BitString& data) {
  Block len{};
  for (int i = 0; i < 8; ++i) len[15 - i] = static_cast<std::uint8_t>(declared >> (8 * i));
  return to_bits(len) + data;
}

}  // namespace

TEST_CASE("rule tokens") {
  for (auto r : kAllRules) CHECK(parse_format_rule(to_string(r)) == r);
  CHECK_FALSE(parse_format_rule("pad4").has_value());
}

TEST_CASE("Pad1: zero fill, empty message gets one zero block, never invalid") {
  Rng rng(1);
  auto t = format(FormatRule::Pad1, bits("1"), rng);
  CHECK(t.body.size() == 128);
  CHECK(t.body[0]);
  CHECK(t.body.popcount() == 1);
  CHECK(format(FormatRule::Pad1, BitString(), rng).body == BitString(128));
  CHECK(validate(FormatRule::Pad1, BitString(128)) == BitString(128));
}

TEST_CASE("Pad1 is not injective: '1' and '10' format identically") {
  Rng rng(1);
  CHECK(format(FormatRule::Pad1, bits("1"), rng) == format(FormatRule::Pad1, bits("10"), rng));
}

TEST_CASE("Pad2: empty message, aligned message, invalid bodies") {
  Rng rng(2);
  auto t = format(FormatRule::Pad2, BitString(), rng);
  CHECK(t.body == bits("1") + BitString(127));
  CHECK(format(FormatRule::Pad2, BitString(128), rng).body.size() == 256);
  CHECK_FALSE(validate(FormatRule::Pad2, BitString(256)).has_value());
  // The last 1-bit must sit in the final block.
  CHECK_FALSE(validate(FormatRule::Pad2, bits("1") + BitString(255)).has_value());
  CHECK_FALSE(validate(FormatRule::Pad2, bits("1")).has_value());
}

TEST_CASE("Pad3: length block, data, zero fill") {
  Rng rng(3);
  auto p = bits("10110011");
  auto t = format(FormatRule::Pad3, p, rng);
  REQUIRE(t.body.size() == 256);
  CHECK(t.body.prefix(128) == pad3_body(8, BitString()));
  CHECK(t.body.slice(128, 8) == p);
  CHECK(t.body.suffix_from(136).all_zero());

  auto empty = format(FormatRule::Pad3, BitString(), rng);
  CHECK(empty.body == BitString(128));
  CHECK(validate(empty) == BitString());
}

TEST_CASE("Pad3 validation failures") {
  auto data = bits("10110000") + BitString(120);
  CHECK(validate(FormatRule::Pad3, pad3_body(8, data)) == bits("10110000"));
  // Nonzero bit at data position 9, past the declared length.
  CHECK_FALSE(validate(FormatRule::Pad3, pad3_body(8, flip_bits(data, {9}))).has_value());
  // Declared length needs two data blocks, body has one.
  CHECK_FALSE(validate(FormatRule::Pad3, pad3_body(129, data)).has_value());
  // Declared length zero with a data block present.
  CHECK_FALSE(validate(FormatRule::Pad3, pad3_body(0, BitString(128))).has_value());
  CHECK_FALSE(validate(FormatRule::Pad3, BitString(64)).has_value());
  CHECK_FALSE(validate(FormatRule::Pad3, BitString(200)).has_value());
  auto huge = flip_bits(pad3_body(8, data), {0});
  CHECK_FALSE(validate(FormatRule::Pad3, huge).has_value());
}

TEST_CASE("EncK: each 1-bit encodes as 01 or 10 with probability one half") {
  Rng rng(4);
  std::map<std::string, int> counts;
  const int n = 20000;
  for (int i = 0; i < n; ++i) counts[format(FormatRule::EncK, bits("01"), rng).body.to_binary()]++;
  REQUIRE(counts.size() == 2);
  CHECK(counts.count("0001") == 1);
  CHECK(counts.count("0010") == 1);
  CHECK(std::abs(counts["0001"] - n / 2) < 500);  // ~7 sigma
}

TEST_CASE("EncK / EncI decode tables") {
  CHECK_FALSE(validate(FormatRule::EncK, bits("0011")).has_value());
  CHECK(validate(FormatRule::EncK, bits("000110")) == bits("011"));
  CHECK_FALSE(validate(FormatRule::EncK, bits("001")).has_value());
  CHECK(validate(FormatRule::EncI, bits("1101")) == bits("10"));
  CHECK_FALSE(validate(FormatRule::EncI, bits("110")).has_value());
}

TEST_CASE("EncI: 0 encodes uniformly to 00, 01, 10") {
  Rng rng(5);
  std::map<std::string, int> counts;
  const int n = 30000;
  for (int i = 0; i < n; ++i) counts[format(FormatRule::EncI, bits("0"), rng).body.to_binary()]++;
  REQUIRE(counts.size() == 3);
  for (auto pair : {"00", "01", "10"}) CHECK(std::abs(counts[pair] - n / 3) < 600);
  CHECK(format(FormatRule::EncI, bits("1"), rng).body == bits("11"));
}

TEST_CASE("round trip for every rule") {
  Rng rng(6);
  for (auto rule : kAllRules) {
    for (int trial = 0; trial < 300; ++trial) {
      auto p = random_bits(rng, rng() % 400);
      auto t = format(rule, p, rng);
      if (is_padding_rule(rule)) {
        CHECK(t.body.size() % 128 == 0);
        CHECK_FALSE(t.body.empty());
      } else {
        CHECK(t.body.size() == 2 * p.size());
      }
      auto back = validate(t);
      REQUIRE(back.has_value());
      if (rule == FormatRule::Pad1) {
        CHECK(back->prefix(p.size()) == p);
        CHECK(back->suffix_from(p.size()).all_zero());
      } else {
        CHECK(*back == p);
      }
    }
  }
}

TEST_CASE("injectivity: random pairs and the (p, p||0) adversarial pair") {
  Rng rng(7);
  for (auto rule : kAllRules) {
    if (!is_injective(rule)) continue;
    for (int trial = 0; trial < 300; ++trial) {
      auto p = random_bits(rng, rng() % 300);
      auto q = random_bits(rng, rng() % 300);
      auto p0 = p + bits("0");
      CHECK(format(rule, p, rng).body != format(rule, p0, rng).body);
      if (p != q) CHECK(format(rule, p, rng).body != format(rule, q, rng).body);
    }
  }
}

TEST_CASE("EncI is total on every even-length body up to 12 bits") {
  for (std::size_t len = 0; len <= 12; len += 2) {
    for (std::uint32_t v = 0; v < (1u << len); ++v) {
      BitString body(len);
      for (std::size_t i = 0; i < len; ++i) body.set(i, (v >> (len - 1 - i)) & 1);
      REQUIRE(validate(FormatRule::EncI, body).has_value());
    }
  }
}

TEST_CASE("EncK pair semantics: 01<->10 swap preserves, 00->11 invalidates") {
  // Every 3-pair body, every target pair.
  for (std::uint32_t v = 0; v < 64; ++v) {
    BitString body(6);
    for (std::size_t i = 0; i < 6; ++i) body.set(i, (v >> (5 - i)) & 1);
    auto decoded = validate(FormatRule::EncK, body);
    for (std::size_t pair = 0; pair < 3; ++pair) {
      const bool hi = body[2 * pair], lo = body[2 * pair + 1];
      auto flipped = flip_bits(body, {2 * pair, 2 * pair + 1});
      auto after = validate(FormatRule::EncK, flipped);
      if (hi != lo) {
        CHECK(after == decoded);
      } else if (!hi && !lo) {
        CHECK_FALSE(after.has_value());
      }
    }
  }
}

TEST_CASE("length_prefixed equals Pad3 formatting") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_bits(rng, rng() % 500);
    CHECK(length_prefixed(p) == format(FormatRule::Pad3, p, rng).body);
  }
}
