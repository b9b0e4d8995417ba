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

#include "authenc/cipher.hpp"
#include "authenc/modes.hpp"
#include "authenc/random.hpp"
#include "doctest.h"

using namespace authenc;

namespace {

Aes128 fips197_cipher() {
  Bytes key(16);
  for (std::size_t i = 0; i < 16; ++i) key[i] = static_cast<std::uint8_t>(i);
  return Aes128(key);
}

Block block_from_hex(std::string_view hex) { return to_block(BitString::from_hex(hex)); }

}  // namespace

TEST_CASE("AES-128 FIPS 197 appendix C.1") {
  auto aes = fips197_cipher();
  auto ct = aes.encrypt_block(block_from_hex("00112233445566778899aabbccddeeff"));
  CHECK(to_hex(ct) == "69c4e0d86a7b0430d8cdb78070b4c55a");
  CHECK(to_hex(aes.decrypt_block(ct)) == "00112233445566778899aabbccddeeff");
}

TEST_CASE("AES-128 rejects bad key lengths") {
  CHECK_THROWS_AS(make_cipher({CipherId::Aes128, Bytes(15)}), std::invalid_argument);
  CHECK_THROWS_AS(make_cipher({CipherId::Toy16, Bytes(16)}), std::invalid_argument);
  CHECK_THROWS_AS(make_cipher({CipherId::Identity, Bytes(1)}), std::invalid_argument);
}

TEST_CASE("block_decrypt inverts block_encrypt on random blocks") {
  Rng rng(10);
  Aes128 aes(random_bytes(rng, 16));
  for (int i = 0; i < 1000; ++i) {
    auto b = random_block(rng);
    CHECK(aes.decrypt_block(aes.encrypt_block(b)) == b);
  }
}

TEST_CASE("identity fixture maps every block to itself") {
  IdentityCipher id;
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    auto b = random_block(rng);
    CHECK(id.encrypt_block(b) == b);
  }
}

TEST_CASE("toy cipher is a permutation of all 2^16 blocks") {
  Toy16Cipher toy(Bytes{0x12, 0x34, 0x56, 0x78});
  std::vector<bool> seen(1 << 16, false);
  for (std::uint32_t x = 0; x < (1u << 16); ++x) {
    auto y = toy.encrypt_word(static_cast<std::uint16_t>(x));
    CHECK_FALSE(seen[y]);
    seen[y] = true;
    REQUIRE(toy.decrypt_word(y) == x);
  }
}

TEST_CASE("CBC: empty message and partial blocks") {
  auto aes = fips197_cipher();
  BitString iv(128);
  CHECK(cbc_encrypt(aes, iv, BitString()).empty());
  CHECK_THROWS_AS(cbc_encrypt(aes, iv, BitString(100)), LengthError);
  CHECK_THROWS_AS(cbc_decrypt(aes, iv, BitString(136)), LengthError);
}

TEST_CASE("CBC round trip with AES and the toy cipher") {
  Rng rng(12);
  Aes128 aes(random_bytes(rng, 16));
  Toy16Cipher toy(random_bytes(rng, 4));
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t nblocks = 1 + rng() % 8;
    auto iv = random_bits(rng, 128);
    auto m = random_bits(rng, 128 * nblocks);
    CHECK(cbc_decrypt(aes, iv, cbc_encrypt(aes, iv, m)) == m);

    auto tiv = random_bits(rng, 16);
    auto tm = random_bits(rng, 16 * nblocks);
    CHECK(cbc_decrypt(toy, tiv, cbc_encrypt(toy, tiv, tm)) == tm);
  }
}

TEST_CASE("CBC matches the chaining equation block by block") {
  Rng rng(13);
  Aes128 aes(random_bytes(rng, 16));
  auto iv = random_block(rng);
  auto p1 = random_block(rng), p2 = random_block(rng);
  Block parts[] = {p1, p2};
  auto c = split_blocks(cbc_encrypt(aes, to_bits(iv), join_blocks(parts)));
  REQUIRE(c.size() == 2);
  CHECK(c[0] == aes.encrypt_block(xor_block(p1, iv)));
  CHECK(c[1] == aes.encrypt_block(xor_block(p2, c[0])));
}

TEST_CASE("CBC malleability: a flip in C_{i-1} flips exactly that bit of P_i") {
  Rng rng(14);
  Aes128 aes(random_bytes(rng, 16));
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t nblocks = 2 + rng() % 4;
    auto iv = random_bits(rng, 128);
    auto m = random_bits(rng, 128 * nblocks);
    auto c = cbc_encrypt(aes, iv, m);
    const std::size_t i = 1 + rng() % (nblocks - 1);  // target block, predecessor is C_{i-1}
    const std::size_t j = rng() % 128;
    auto tampered = flip_bits(c, {(i - 1) * 128 + j});
    auto diff = xor_bits(cbc_decrypt(aes, iv, tampered), m);
    for (std::size_t blk = 0; blk < nblocks; ++blk) {
      auto d = diff.slice(blk * 128, 128);
      if (blk == i) {
        CHECK(d == flip_bits(BitString(128), {j}));
      } else if (blk != i - 1) {
        CHECK(d.all_zero());
      }
    }
    // Flipping an IV bit flips the same bit of P_0 and nothing else.
    auto via_iv = xor_bits(cbc_decrypt(aes, flip_bits(iv, {j}), c), m);
    CHECK(via_iv == flip_bits(BitString(m.size()), {j}));
  }
}

TEST_CASE("counter increment wraps within the low 32 bits") {
  auto c = block_from_hex("000102030405060708090a0bffffffff");
  CHECK(to_hex(increment_counter(c)) == "000102030405060708090a0b00000000");
  CHECK(to_hex(increment_counter(block_from_hex("000000000000000000000000000000ff"))) ==
        "00000000000000000000000000000100");
}

TEST_CASE("CTR: keystream blocks equal E(ctr0 + i); crypt is an involution") {
  Rng rng(15);
  Aes128 aes(random_bytes(rng, 16));
  auto ctr0 = random_block(rng);
  auto ks = ctr_keystream(aes, ctr0, 2);
  CHECK(ks[0] == aes.encrypt_block(ctr0));
  CHECK(ks[1] == aes.encrypt_block(increment_counter(ctr0)));

  CHECK(ctr_crypt(aes, ctr0, BitString()).empty());
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_bits(rng, rng() % 700);
    auto c = ctr_crypt(aes, ctr0, s);
    CHECK(c.size() == s.size());
    CHECK(ctr_crypt(aes, ctr0, c) == s);
  }
}

TEST_CASE("OTP: identity on zero pad, involution, short pad rejected") {
  Rng rng(16);
  auto s = random_bits(rng, 77);
  CHECK(otp_crypt(Pad{BitString(77)}, s) == s);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_bits(rng, rng() % 300);
    Pad pad{random_bits(rng, m.size() + rng() % 10)};
    CHECK(otp_crypt(pad, otp_crypt(pad, m)) == m);
  }
  CHECK_THROWS_AS(otp_crypt(Pad{BitString(10)}, BitString(11)), LengthError);
}

TEST_CASE("CBC-MAC: one block, two blocks, determinism, bounds") {
  Rng rng(17);
  Aes128 aes(random_bytes(rng, 16));
  auto d1 = random_block(rng), d2 = random_block(rng);
  CHECK(cbc_mac(aes, to_bits(d1), 64) == to_bits(aes.encrypt_block(d1)).prefix(64));

  Block both[] = {d1, d2};
  auto expected = to_bits(aes.encrypt_block(xor_block(aes.encrypt_block(d1), d2))).prefix(96);
  CHECK(cbc_mac(aes, join_blocks(both), 96) == expected);
  CHECK(cbc_mac(aes, join_blocks(both), 96) == cbc_mac(aes, join_blocks(both), 96));

  CHECK_THROWS_AS(cbc_mac(aes, BitString(120), 64), LengthError);
  CHECK_THROWS(cbc_mac(aes, BitString(128), 31));
  CHECK_THROWS(cbc_mac(aes, BitString(128), 129));
}

TEST_CASE("CBC-MAC on the toy cipher collides at roughly the birthday rate") {
  Rng rng(18);
  Toy16Cipher toy(random_bytes(rng, 4));
  std::map<std::string, int> tags;
  const int n = 1024;
  int collisions = 0;
  for (int i = 0; i < n; ++i) {
    auto tag = cbc_mac(toy, random_bits(rng, 32), 16).to_hex();
    collisions += tags[tag]++;
  }
  // Expected pairs for a random function: n(n-1)/2 / 2^16 ~= 8.
  CHECK(collisions >= 1);
  CHECK(collisions <= 30);
}

TEST_CASE("MeteredCipher charges once per block call") {
  auto aes = fips197_cipher();
  WorkMeter meter;
  MeteredCipher metered(aes, meter);
  ctr_crypt(metered, Block{}, BitString(300));
  CHECK(meter.units() == 3);
  cbc_mac(metered, BitString(256), 64);
  CHECK(meter.units() == 5);
}

TEST_CASE("tags_equal") {
  CHECK(tags_equal(BitString::from_hex("0102"), BitString::from_hex("0102")));
  CHECK_FALSE(tags_equal(BitString::from_hex("0102"), BitString::from_hex("0103")));
  CHECK_FALSE(tags_equal(BitString::from_hex("01"), BitString::from_hex("0100")));
}
