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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>

#include "authenc/bitstring.hpp"

namespace authenc {

enum class CipherId {
  Aes128,    // FIPS 197, 16-byte key
  Toy16,     // 16-bit SPN fixture for exhaustive tests, 4-byte key
  Identity,  // 128-bit identity fixture, key ignored (must be empty)
};

std::string_view to_string(CipherId id);

struct CipherKey {
  CipherId id = CipherId::Aes128;
  Bytes key;

  static CipherKey aes128(Bytes key) { return {CipherId::Aes128, std::move(key)}; }
  friend bool operator==(const CipherKey&, const CipherKey&) = default;
};

/// Abstract work counter. Every block-cipher invocation made through a
/// MeteredCipher and every validated block charges one unit.
class WorkMeter {
 public:
  void charge(std::uint64_t units = 1) { units_ += units; }
  std::uint64_t units() const { return units_; }

 private:
  std::uint64_t units_ = 0;
};

/// A keyed permutation on fixed-width blocks.
class BlockCipher {
 public:
  virtual ~BlockCipher() = default;

  virtual std::size_t block_bytes() const = 0;
  virtual void encrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const = 0;
  virtual void decrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const = 0;

  std::size_t block_bits() const { return block_bytes() * 8; }

  Block encrypt_block(const Block& b) const;
  Block decrypt_block(const Block& b) const;
  BitString encrypt_block(const BitString& b) const;
  BitString decrypt_block(const BitString& b) const;
};

/// Throws std::invalid_argument when the key length does not suit the cipher.
std::unique_ptr<BlockCipher> make_cipher(const CipherKey& key);

class Aes128 final : public BlockCipher {
 public:
  explicit Aes128(std::span<const std::uint8_t> key);

  std::size_t block_bytes() const override { return 16; }
  void encrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const override;
  void decrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const override;

 private:
  std::array<std::uint8_t, 176> round_keys_{};
};

class Toy16Cipher final : public BlockCipher {
 public:
  explicit Toy16Cipher(std::span<const std::uint8_t> key);

  std::size_t block_bytes() const override { return 2; }
  void encrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const override;
  void decrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const override;

  std::uint16_t encrypt_word(std::uint16_t x) const;
  std::uint16_t decrypt_word(std::uint16_t x) const;

 private:
  static constexpr int kRounds = 4;
  std::array<std::uint16_t, kRounds + 1> round_keys_{};
};

class IdentityCipher final : public BlockCipher {
 public:
  std::size_t block_bytes() const override { return 16; }
  void encrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const override;
  void decrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const override;
};

/// Forwards to another cipher, charging a WorkMeter once per call.
class MeteredCipher final : public BlockCipher {
 public:
  MeteredCipher(const BlockCipher& inner, WorkMeter& meter) : inner_(inner), meter_(meter) {}

  std::size_t block_bytes() const override { return inner_.block_bytes(); }
  void encrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const override {
    meter_.charge();
    inner_.encrypt(in, out);
  }
  void decrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const override {
    meter_.charge();
    inner_.decrypt(in, out);
  }

 private:
  const BlockCipher& inner_;
  WorkMeter& meter_;
};

}  // namespace authenc
